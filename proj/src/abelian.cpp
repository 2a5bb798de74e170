#include "rouxlab/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rouxlab {

AbelianGroup::AbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  order_ = 1;
  exponent_ = 1;
  for (int m : orders_) {
    if (m <= 0) throw std::invalid_argument("cyclic factor order must be >= 1");
    if (static_cast<std::int64_t>(order_) * m > (1 << 21))
      throw std::invalid_argument("group too large");
    order_ *= m;
    exponent_ = static_cast<int>(std::lcm<std::int64_t>(exponent_, m));
  }
}

AbelianGroup make_group(const std::vector<int>& orders) { return AbelianGroup(orders); }

int AbelianGroup::add(int a, int b) const {
  int out = 0, stride = 1;
  for (std::size_t j = orders_.size(); j-- > 0;) {
    int m = orders_[j];
    int ra = a % m, rb = b % m;
    a /= m;
    b /= m;
    out += ((ra + rb) % m) * stride;
    stride *= m;
  }
  return out;
}

int AbelianGroup::neg(int a) const {
  int out = 0, stride = 1;
  for (std::size_t j = orders_.size(); j-- > 0;) {
    int m = orders_[j];
    int ra = a % m;
    a /= m;
    out += ((m - ra) % m) * stride;
    stride *= m;
  }
  return out;
}

int AbelianGroup::mul_int(int a, std::int64_t t) const {
  int out = 0, stride = 1;
  for (std::size_t j = orders_.size(); j-- > 0;) {
    int m = orders_[j];
    std::int64_t ra = a % m;
    a /= m;
    std::int64_t v = (ra * (((t % m) + m) % m)) % m;
    out += static_cast<int>(v) * stride;
    stride *= m;
  }
  return out;
}

int AbelianGroup::element_order(int a) const {
  int ord = 1;
  auto t = tuple(a);
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    int m = orders_[j];
    int g = std::gcd(t[j], m);
    ord = static_cast<int>(std::lcm(ord, m / (g == 0 ? m : g)));
  }
  return ord;
}

std::vector<int> AbelianGroup::tuple(int index) const {
  std::vector<int> t(orders_.size());
  for (std::size_t j = orders_.size(); j-- > 0;) {
    t[j] = index % orders_[j];
    index /= orders_[j];
  }
  return t;
}

int AbelianGroup::index(const std::vector<int>& residues) const {
  if (residues.size() != orders_.size())
    throw std::invalid_argument("residue tuple length mismatch");
  int idx = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    int r = residues[j] % orders_[j];
    if (r < 0) r += orders_[j];
    idx = idx * orders_[j] + r;
  }
  return idx;
}

int AbelianGroup::generator(int j) const {
  std::vector<int> t(orders_.size(), 0);
  t[j] = orders_[j] > 1 ? 1 : 0;
  return index(t);
}

std::string AbelianGroup::element_str(int index) const {
  auto t = tuple(index);
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (j) os << ",";
    os << t[j];
  }
  os << ")";
  return os.str();
}

Character::Character(AbelianGroup group, int index)
    : group_(std::move(group)), index_(index) {
  if (index < 0 || index >= group_.order())
    throw std::invalid_argument("character index out of range");
  auto t = group_.tuple(index_);
  weights_.resize(t.size());
  for (std::size_t j = 0; j < t.size(); ++j)
    weights_[j] = static_cast<std::int64_t>(t[j]) * (group_.exponent() / group_.orders()[j]);
}

int Character::exponent_at(int g) const {
  auto t = group_.tuple(g);
  std::int64_t e = 0;
  for (std::size_t j = 0; j < t.size(); ++j) e += weights_[j] * t[j];
  int E = group_.exponent();
  return static_cast<int>(((e % E) + E) % E);
}

Cyclotomic Character::operator()(int g) const {
  return Cyclotomic::root_of_unity(group_.exponent(), exponent_at(g));
}

Character Character::pow(std::int64_t k) const {
  return Character(group_, group_.mul_int(index_, k));
}

GroupRingElement::GroupRingElement(AbelianGroup group)
    : group_(std::move(group)), coeffs_(group_.order(), 0) {}

GroupRingElement GroupRingElement::delta(const AbelianGroup& group, int g) {
  GroupRingElement e(group);
  e.coeffs_[g] = 1;
  return e;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  if (group_ != o.group_) throw std::invalid_argument("group mismatch");
  GroupRingElement out(group_);
  for (int g = 0; g < group_.order(); ++g) out.coeffs_[g] = coeffs_[g] + o.coeffs_[g];
  return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  if (group_ != o.group_) throw std::invalid_argument("group mismatch");
  GroupRingElement out(group_);
  for (int g = 0; g < group_.order(); ++g) {
    if (coeffs_[g] == 0) continue;
    for (int h = 0; h < group_.order(); ++h) {
      if (o.coeffs_[h] == 0) continue;
      out.coeffs_[group_.add(g, h)] += coeffs_[g] * o.coeffs_[h];
    }
  }
  return out;
}

GroupRingElement GroupRingElement::star() const {
  GroupRingElement out(group_);
  for (int g = 0; g < group_.order(); ++g) out.coeffs_[group_.neg(g)] = coeffs_[g];
  return out;
}

Cyclotomic eval_character(const Character& alpha, const GroupRingElement& x) {
  if (alpha.group() != x.group()) throw std::invalid_argument("group mismatch");
  int E = alpha.group().exponent();
  std::vector<Rational> exps(static_cast<std::size_t>(E), Rational(0));
  for (int g = 0; g < x.group().order(); ++g) {
    if (x.coeff(g) != 0) exps[alpha.exponent_at(g)] += Rational(x.coeff(g));
  }
  return Cyclotomic::from_exponents(E, exps);
}

Cyclotomic hat_c(const std::vector<std::int64_t>& params, const Character& alpha) {
  const AbelianGroup& G = alpha.group();
  if (static_cast<int>(params.size()) != G.order())
    throw std::invalid_argument("parameter map must cover the whole group");
  int E = G.exponent();
  std::vector<Rational> exps(static_cast<std::size_t>(E), Rational(0));
  for (int h = 0; h < G.order(); ++h) {
    if (params[h] != 0) {
      int e = (E - alpha.exponent_at(h)) % E;  // conj(alpha(h))
      exps[e] += Rational(params[h]);
    }
  }
  return Cyclotomic::from_exponents(E, exps);
}

Homomorphism::Homomorphism(AbelianGroup from, AbelianGroup to,
                           std::vector<int> generator_images)
    : from_(std::move(from)), to_(std::move(to)), images_(std::move(generator_images)) {
  if (images_.size() != from_.orders().size())
    throw std::invalid_argument("one generator image per cyclic factor required");
  for (std::size_t j = 0; j < images_.size(); ++j) {
    if (images_[j] < 0 || images_[j] >= to_.order())
      throw std::invalid_argument("generator image out of range");
    if (to_.mul_int(images_[j], from_.orders()[j]) != to_.identity())
      throw std::invalid_argument("images do not satisfy the factor order relations");
  }
}

Homomorphism Homomorphism::identity(const AbelianGroup& g) {
  std::vector<int> images;
  for (std::size_t j = 0; j < g.orders().size(); ++j) images.push_back(g.generator(j));
  return Homomorphism(g, g, images);
}

int Homomorphism::operator()(int g) const {
  auto t = from_.tuple(g);
  int out = to_.identity();
  for (std::size_t j = 0; j < t.size(); ++j)
    out = to_.add(out, to_.mul_int(images_[j], t[j]));
  return out;
}

bool Homomorphism::is_injective() const {
  return static_cast<int>(subgroup_generated(to_, images_).size()) == from_.order();
}

std::vector<int> subgroup_generated(const AbelianGroup& group, const std::vector<int>& gens) {
  std::set<int> members{group.identity()};
  std::vector<int> frontier{group.identity()};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int g : gens) {
        int y = group.add(x, g);
        if (members.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return {members.begin(), members.end()};
}

namespace {

struct SetGroup {
  std::vector<int> elements;  // ids, sorted
  std::function<int(int, int)> op;
  int id;

  int order_of(int a) const {
    int x = a, n = 1;
    while (x != id) {
      x = op(x, a);
      ++n;
    }
    return n;
  }
  int power(int a, std::int64_t t) const {
    int n = order_of(a);
    t %= n;
    if (t < 0) t += n;
    int x = id;
    for (std::int64_t i = 0; i < t; ++i) x = op(x, a);
    return x;
  }
  int inverse(int a) const { return power(a, order_of(a) - 1); }
};

// Constructive structure theorem: peel off a maximal-order cyclic factor,
// recurse on the quotient, and lift quotient generators to elements of the
// same order.
void decompose_set_group(const SetGroup& G, std::vector<int>* orders,
                         std::vector<int>* gens) {
  if (G.elements.size() == 1) return;
  int g1 = G.id, m1 = 1;
  for (int x : G.elements) {
    int o = G.order_of(x);
    if (o > m1 || (o == m1 && x < g1)) {
      m1 = o;
      g1 = x;
    }
  }
  // Cyclic subgroup <g1> and canonical representatives of the quotient.
  std::set<int> cyc;
  for (int x = G.id;;) {
    cyc.insert(x);
    x = G.op(x, g1);
    if (x == G.id) break;
  }
  std::map<int, int> canon;  // element -> minimal id in its coset
  for (int x : G.elements) {
    if (canon.count(x)) continue;
    std::vector<int> coset;
    int rep = x;
    for (int c : cyc) {
      int y = G.op(x, c);
      coset.push_back(y);
      rep = std::min(rep, y);
    }
    for (int y : coset) canon[y] = rep;
  }
  std::set<int> qset;
  for (auto& [x, rep] : canon) qset.insert(rep);
  SetGroup Q;
  Q.elements.assign(qset.begin(), qset.end());
  Q.id = canon.at(G.id);
  Q.op = [&G, canon](int a, int b) { return canon.at(G.op(a, b)); };

  std::vector<int> q_orders, q_gens;
  decompose_set_group(Q, &q_orders, &q_gens);

  orders->push_back(m1);
  gens->push_back(g1);
  for (std::size_t i = 0; i < q_gens.size(); ++i) {
    int m = q_orders[i];
    int lift = q_gens[i];
    // m*lift lands in <g1>; divisibility of the discrete log by m follows
    // from maximality of m1, so the correction below has integer exponent.
    int p = G.power(lift, m);
    std::int64_t c = 0;
    for (int x = G.id; x != p; x = G.op(x, g1)) ++c;
    if (c % m != 0) throw std::logic_error("group operation is not abelian");
    int corrected = G.op(lift, G.power(G.inverse(g1), c / m));
    orders->push_back(m);
    gens->push_back(corrected);
  }
}

AbelianStructure build_structure(const SetGroup& G) {
  std::vector<int> orders, gens;
  decompose_set_group(G, &orders, &gens);
  if (orders.empty()) {
    orders.push_back(1);
    gens.push_back(G.id);
  }
  AbelianStructure s;
  s.group = AbelianGroup(orders);
  s.generators = gens;
  s.from_abstract.resize(s.group.order());
  for (int idx = 0; idx < s.group.order(); ++idx) {
    auto t = s.group.tuple(idx);
    int x = G.id;
    for (std::size_t j = 0; j < t.size(); ++j) x = G.op(x, G.power(gens[j], t[j]));
    s.from_abstract[idx] = x;
    s.to_abstract[x] = idx;
  }
  if (static_cast<int>(s.to_abstract.size()) != s.group.order())
    throw std::logic_error("abelian decomposition failed to be bijective");
  return s;
}

}  // namespace

AbelianStructure decompose_subgroup(const AbelianGroup& parent,
                                    const std::vector<int>& members) {
  SetGroup G;
  G.elements = members;
  std::sort(G.elements.begin(), G.elements.end());
  G.id = parent.identity();
  G.op = [&parent](int a, int b) { return parent.add(a, b); };
  return build_structure(G);
}

AbelianStructure decompose_generic(const std::vector<int>& elements,
                                   const std::function<int(int, int)>& op, int identity) {
  SetGroup G;
  G.elements = elements;
  std::sort(G.elements.begin(), G.elements.end());
  G.id = identity;
  G.op = op;
  return build_structure(G);
}

}  // namespace rouxlab
