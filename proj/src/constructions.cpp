#include "rouxlab/constructions.hpp"

#include <numeric>
#include <stdexcept>

#include "rouxlab/galois.hpp"

namespace rouxlab {

bool ConferenceMatrix::is_conference() const {
  for (int i = 0; i < n; ++i) {
    if (at(i, i) != 0) return false;
    for (int j = 0; j < n; ++j)
      if (i != j && at(i, j) != 1 && at(i, j) != -1) return false;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::int64_t dot = 0;
      for (int k = 0; k < n; ++k) dot += static_cast<std::int64_t>(at(i, k)) * at(j, k);
      if (dot != (i == j ? n - 1 : 0)) return false;
    }
  }
  return true;
}

bool ConferenceMatrix::is_antisymmetric() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

ConferenceMatrix conference_iterate(int k) {
  if (k < 1) throw std::invalid_argument("conference iteration needs k >= 1");
  ConferenceMatrix m;
  m.n = 2;
  m.a = {0, 1, -1, 0};
  for (int step = 1; step < k; ++step) {
    ConferenceMatrix next;
    next.n = 2 * m.n;
    next.a.assign(static_cast<std::size_t>(next.n) * next.n, 0);
    for (int i = 0; i < m.n; ++i) {
      for (int j = 0; j < m.n; ++j) {
        int v = m.at(i, j);
        int eye = i == j ? 1 : 0;
        next.a[static_cast<std::size_t>(i) * next.n + j] = v;
        next.a[static_cast<std::size_t>(i) * next.n + (m.n + j)] = v + eye;
        next.a[static_cast<std::size_t>(m.n + i) * next.n + j] = v - eye;
        next.a[static_cast<std::size_t>(m.n + i) * next.n + (m.n + j)] = -v;
      }
    }
    m = std::move(next);
  }
  if (!m.is_conference() || !m.is_antisymmetric())
    throw std::logic_error("conference iteration produced an invalid matrix");
  return m;
}

Roux conference_roux(const ConferenceMatrix& m) {
  if (!m.is_conference() || !m.is_antisymmetric())
    throw std::invalid_argument("input must be an antisymmetric conference matrix");
  AbelianGroup c4 = make_group({4});
  Roux b(c4, m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      if (i == j) continue;
      b.set(i, j, m.at(i, j) == 1 ? 1 : 3);  // i or -i
    }
  RouxParameters params = require_roux(b);
  if (params.c[0] != 0 || params.c[2] != 0 || params.c[1] != m.n / 2 - 1 ||
      params.c[3] != m.n / 2 - 1)
    throw std::logic_error("conference roux parameters are off the closed form");
  return b;
}

Roux thas_somma(int q, int m) {
  if (m < 1) throw std::invalid_argument("thas-somma needs m >= 1");
  if (!GaloisField::is_prime_power(q) || q > 16)
    throw std::invalid_argument("q must be a prime power <= 16");
  std::int64_t vertices = 1;
  for (int t = 0; t < 2 * m; ++t) {
    vertices *= q;
    if (vertices > 1024) throw std::invalid_argument("vertex set exceeds the 1024 cap");
  }
  GaloisField f(q);

  // the additive group of F_q is elementary abelian of rank k = log_p q
  int p = f.p();
  int k = 0;
  for (int t = q; t > 1; t /= p) ++k;
  AbelianGroup gamma(std::vector<int>(static_cast<std::size_t>(k), p));
  // field element (base-p digits, x^0 digit least significant) -> group index
  auto field_to_group = [&](int a) {
    std::vector<int> residues(static_cast<std::size_t>(k));
    for (int j = k - 1; j >= 0; --j) {
      residues[static_cast<std::size_t>(j)] = a % p;
      a /= p;
    }
    // digits were peeled least-significant-first into the back
    std::reverse(residues.begin(), residues.end());
    return gamma.index(residues);
  };

  const int n = static_cast<int>(vertices);
  auto coord = [&](int v, int t) {
    for (int s = 0; s < t; ++s) v /= q;
    return v % q;
  };

  Roux b(gamma, n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      int form = 0;
      for (int t = 0; t < m; ++t) {
        int u1 = coord(u, 2 * t), u2 = coord(u, 2 * t + 1);
        int v1 = coord(v, 2 * t), v2 = coord(v, 2 * t + 1);
        form = f.add(form, f.sub(f.mul(u1, v2), f.mul(u2, v1)));
      }
      b.set(u, v, field_to_group(form));
    }
  }

  RouxParameters params = require_roux(b);
  std::int64_t expected = vertices / q;  // q^{2m-1}
  for (int g = 0; g < gamma.order(); ++g) {
    std::int64_t want = g == gamma.identity() ? expected - 2 : expected;
    if (params.c[g] != want)
      throw std::logic_error("thas-somma parameters are off the closed form");
  }
  return b;
}

std::pair<int, int> gray(int j) {
  switch (j) {
    case 0:
      return {0, 0};
    case 1:
      return {0, 1};
    case 2:
      return {1, 1};
    case 3:
      return {1, 0};
    default:
      throw std::invalid_argument("gray codeword index must lie in 0..3");
  }
}

int gray_inverse(int bit1, int bit2) {
  for (int j = 0; j < 4; ++j)
    if (gray(j) == std::make_pair(bit1, bit2)) return j;
  throw std::invalid_argument("gray codeword bits must be 0/1");
}

Roux hoggar_family(int k, bool allow_invalid) {
  if (k != 1 && k != 3 && !(k == 2 && allow_invalid))
    throw std::invalid_argument("supported family members are k = 1 and k = 3");
  const int dim = 1 << k;           // |Z_2^k|
  const int n = dim * dim;          // index set (Z_2^k)^2
  AbelianGroup c4 = make_group({4});
  auto dot = [&](int x, int y) {
    int bits = x & y, parity = 0;
    while (bits) {
      parity ^= bits & 1;
      bits >>= 1;
    }
    return parity;
  };
  Roux b(c4, n);
  for (int ab = 0; ab < n; ++ab) {
    int a = ab / dim, bb = ab % dim;
    for (int cd = 0; cd < n; ++cd) {
      if (ab == cd) continue;
      int c = cd / dim, d = cd % dim;
      int ac = a ^ c;
      int e = gray_inverse(dot(d, ac), dot(bb, ac));
      if (!(a == c || bb == d)) e = (e + 2) % 4;  // global sign flip: -i^e
      b.set(ab, cd, e);
    }
  }
  return b;
}

PslRoux psl_roux(int q) {
  PslPair pair = psl_pair(q);
  SubgroupHandle h(pair.group, pair.subgroup_members);
  HigmanCertificate cert = verify_higman_pair(pair.group, h);
  if (!cert.pass())
    throw std::logic_error("the SL(2,q) x C4 pair failed Higman verification");
  HigmanRoux hr = roux_from_higman(pair.group, h, cert);

  // paper placement: (q-1)/2 sits on {+-1} for q = 1 mod 4, on {+-i} otherwise
  const AbelianGroup& g = hr.roux.group();
  if (g.order() != 4)
    throw std::logic_error("PSL quotient K/H is not C4");
  std::int64_t half = (q - 1) / 2;
  bool q1 = q % 4 == 1;
  for (int e = 0; e < 4; ++e) {
    int ord = g.element_order(e);
    std::int64_t want = (ord <= 2) == q1 ? half : 0;  // {1,-1} vs {i,-i}
    if (hr.parameters.c[e] != want)
      throw std::logic_error("PSL roux parameters are off the closed form");
  }
  return PslRoux{std::move(hr.roux), std::move(hr.parameters), cert};
}

Su3Parameters su3_parameters(std::int64_t q, std::int64_t r) {
  if (q <= 2) throw std::invalid_argument("the SU(3,q) family needs q > 2");
  if (r <= 1 || (q + 1) % r != 0)
    throw std::invalid_argument("r must be a divisor of q+1 with r > 1");
  Su3Parameters out;
  out.n = q * q * q + 1;
  std::int64_t thick = (q + 1) * (q * q - 1) / r;
  std::int64_t c1 = thick + q - q * q;

  AbelianGroup cr = make_group({static_cast<int>(r)});
  std::vector<std::int64_t> c(static_cast<std::size_t>(r), thick);
  c[0] = c1;
  out.roux_params = RouxParameters{cr, std::move(c)};
  if (out.roux_params.sum() != out.n - 2)
    throw std::logic_error("SU(3,q) parameters do not sum to n-2");
  if (c1 < 0) throw std::logic_error("SU(3,q) identity parameter went negative");

  out.drackn.n = out.n;
  out.drackn.r = r;
  out.drackn.c = (q - 1) * (q + 1) * (q + 1) / r;
  out.drackn.delta = out.n - r * out.drackn.c - 2;
  if (c1 != out.n - out.drackn.c * (r - 1) - 2)
    throw std::logic_error("SU(3,q) parameters are not in drackn form");
  return out;
}

MaximalFamilyParameters maximal_family_parameters(std::int64_t j) {
  if (j < 1) throw std::invalid_argument("family index must be >= 1");
  MaximalFamilyParameters out;
  out.j = j;
  std::int64_t j2 = j * j, j3 = j2 * j, j4 = j3 * j;
  std::int64_t c1 = 4 * j4 + 12 * j3 + 10 * j2 - 2;
  std::int64_t ci = 4 * j4 + 8 * j3 + 4 * j2;
  std::int64_t cm1 = 4 * j4 + 4 * j3 - 2 * j2;
  out.n = 16 * j2 * (j + 1) * (j + 1);
  out.d = 4 * j * (j + 1);

  AbelianGroup c4 = make_group({4});
  out.roux_params = RouxParameters{c4, {c1, ci, cm1, ci}};
  if (out.roux_params.sum() != out.n - 2)
    throw std::logic_error("family parameters do not sum to n-2");
  if (out.d * out.d != out.n) throw std::logic_error("d is not sqrt(n)");

  // rank checks at the degree-one character and its square, exact
  auto rank_at = [&](const Character& alpha) {
    Cyclotomic chat = hat_c(out.roux_params.c, alpha);
    Rational cr = chat.rational_value();
    Rational disc = cr * cr + Rational(4 * (out.n - 1));
    Rational sq;
    if (!rational_sqrt(disc, &sq))
      throw std::logic_error("family rank discriminant is not a rational square");
    Rational mu = (cr + sq) / Rational(2 * (out.n - 1));
    Rational d = Rational(out.n) / (Rational(1) + Rational(out.n - 1) * mu * mu);
    if (!d.is_integer()) throw std::logic_error("family rank is not an integer");
    return d.num();
  };
  Character alpha(c4, 1);
  if (rank_at(alpha) != out.d) throw std::logic_error("rank at the base character is off");
  out.d_second_power = rank_at(alpha.pow(2));
  if (out.d_second_power != out.d * (out.d + 1) / 2)
    throw std::logic_error("rank at the squared character is not d(d+1)/2");
  return out;
}

std::variant<Roux, RouxError> lift_c4_signature(const SignatureMatrix& s) {
  const int L = s.level();
  AbelianGroup c4 = make_group({4});
  Roux b(c4, s.n());
  for (int i = 0; i < s.n(); ++i)
    for (int j = 0; j < s.n(); ++j) {
      if (i == j) continue;
      std::int64_t e4 = static_cast<std::int64_t>(s.at(i, j)) * 4;
      if (e4 % L != 0)
        throw std::invalid_argument("signature entry is not a 4th root of unity");
      b.set(i, j, static_cast<int>((e4 / L) % 4));
    }
  auto res = verify_roux(b);
  if (auto* err = std::get_if<RouxError>(&res)) return *err;
  return b;
}

Roux example_conference_roux() {
  // first row all i; interior follows the inverse-symmetry pattern of the
  // 4-point tetrahedron example
  AbelianGroup c4 = make_group({4});
  Roux b(c4, 4);
  const int I = 1, MI = 3;
  int cells[4][4] = {{-1, I, I, I}, {MI, -1, I, MI}, {MI, MI, -1, I}, {MI, I, MI, -1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) b.set(i, j, cells[i][j]);
  return b;
}

}  // namespace rouxlab
