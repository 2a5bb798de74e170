#include <doctest.h>

#include <random>

#include "rouxlab/constructions.hpp"
#include "rouxlab/roux.hpp"

using namespace rouxlab;

namespace {

// Independent oracle: (B^2)_ij as a group-ring element via convolution.
GroupRingElement square_cell(const Roux& b, int i, int j) {
  GroupRingElement acc(b.group());
  for (int k = 0; k < b.n(); ++k) {
    if (b.at(i, k) == Roux::kZero || b.at(k, j) == Roux::kZero) continue;
    acc = acc + GroupRingElement::delta(b.group(), b.group().add(b.at(i, k), b.at(k, j)));
  }
  return acc;
}

Roux complete_graph_roux(const AbelianGroup& g, int n) {
  Roux b(g, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) b.set(i, j, g.identity());
  return b;
}

}  // namespace

TEST_CASE("the 4x4 conference roux verifies with c_{+-i} = 1") {
  Roux b = example_conference_roux();
  RouxParameters p = require_roux(b);
  CHECK(p.c == std::vector<std::int64_t>{0, 1, 0, 1});
  CHECK(p.sum() == 2);
  CHECK(p.inverse_symmetric());

  // oracle: every off-diagonal cell of B^2 equals sum_g c_g (gB)_ij
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      GroupRingElement cell = square_cell(b, i, j);
      GroupRingElement expect(b.group());
      for (int g = 0; g < 4; ++g)
        expect.add_coeff(b.group().add(g, b.at(i, j)), p.c[g]);
      CHECK(cell == expect);
    }
}

TEST_CASE("complete-graph pattern over the trivial group") {
  AbelianGroup trivial = make_group({1});
  for (int n : {2, 3, 5, 8}) {
    RouxParameters p = require_roux(complete_graph_roux(trivial, n));
    CHECK(p.c == std::vector<std::int64_t>{n - 2});
  }
}

TEST_CASE("perturbing one entry breaks R4 with conflicting demands") {
  Roux b = example_conference_roux();
  b.set_pair(0, 1, 3);  // delta_i -> delta_{-i}, partner adjusted
  auto res = verify_roux(b);
  auto* err = std::get_if<RouxError>(&res);
  REQUIRE(err != nullptr);
  CHECK(err->kind == RouxError::Kind::R4);
  CHECK(err->demanded_ref != err->demanded_here);

  // oracle: recompute both cited cells by brute force and confirm the clash
  auto demand_at = [&](int i, int j) {
    GroupRingElement cell = square_cell(b, i, j);
    std::vector<std::int64_t> demand(4);
    for (int g = 0; g < 4; ++g) demand[g] = cell.coeff(b.group().add(g, b.at(i, j)));
    return demand;
  };
  CHECK(demand_at(err->ref_i, err->ref_j) == err->demanded_ref);
  CHECK(demand_at(err->i, err->j) == err->demanded_here);
}

TEST_CASE("structural violations are reported with the cell") {
  AbelianGroup c4 = make_group({4});
  Roux b = example_conference_roux();
  b.set(2, 2, 0);
  auto res = verify_roux(b);
  REQUIRE(std::holds_alternative<RouxError>(res));
  CHECK(std::get<RouxError>(res).kind == RouxError::Kind::R1);

  Roux b2 = example_conference_roux();
  b2.set(1, 2, 3);  // breaks inverse symmetry only
  auto res2 = verify_roux(b2);
  REQUIRE(std::holds_alternative<RouxError>(res2));
  CHECK(std::get<RouxError>(res2).kind == RouxError::Kind::R3);

  CHECK_THROWS_AS(Roux(c4, 1), std::invalid_argument);
}

TEST_CASE("degenerate n = 2 has all-zero parameters") {
  AbelianGroup c4 = make_group({4});
  Roux b(c4, 2);
  b.set_pair(0, 1, 1);
  RouxParameters p = require_roux(b);
  CHECK(p.sum() == 0);
}

TEST_CASE("switching preserves parameters; identity switch is a no-op") {
  Roux b = example_conference_roux();
  RouxParameters before = require_roux(b);

  std::vector<int> identity(4, 0);
  CHECK(switch_roux(b, identity) == b);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> elem(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> d(4);
    for (auto& v : d) v = elem(rng);
    RouxParameters after = require_roux(switch_roux(b, d));
    CHECK(after.c == before.c);
  }
  CHECK_THROWS_AS(switch_roux(b, {0, 0}), std::invalid_argument);
}

TEST_CASE("normalization fixes the first row and column") {
  Roux b = example_conference_roux();
  Roux norm = normalize(b);
  for (int j = 1; j < 4; ++j) {
    CHECK(norm.at(0, j) == 0);
    CHECK(norm.at(j, 0) == 0);
  }
  // the D = (1, i, i, i) switch computed by hand gives the same matrix
  CHECK(norm == switch_roux(b, {0, 1, 1, 1}));
  CHECK(normalize(norm) == norm);

  std::mt19937 rng(13);
  std::uniform_int_distribution<int> elem(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> d(4);
    for (auto& v : d) v = elem(rng);
    CHECK(normalize(switch_roux(b, d)) == norm);
  }
}

TEST_CASE("scale requires h^2 = 1 and reindexes parameters") {
  Roux b = example_conference_roux();
  CHECK(scale(b, 0) == b);

  // h = -1: c'_g = c_{g * (-1)}; the conference parameters are fixed by this
  RouxParameters p = require_roux(scale(b, 2));
  CHECK(p.c == std::vector<std::int64_t>{0, 1, 0, 1});

  CHECK_THROWS_AS(scale(b, 1), std::invalid_argument);  // h = i
}

TEST_CASE("scaling twice by an involution is the identity") {
  Roux b = example_conference_roux();
  CHECK(scale(scale(b, 2), 2) == b);
}

TEST_CASE("pushforward collapses parameters along the homomorphism") {
  Roux b = example_conference_roux();
  AbelianGroup c4 = b.group();
  CHECK(pushforward(b, Homomorphism::identity(c4)) == b);

  // z -> z^2 onto C2: i and -i land on -1
  AbelianGroup c2 = make_group({2});
  Roux onto2 = pushforward(b, Homomorphism(c4, c2, {1}));
  RouxParameters p2 = require_roux(onto2);
  CHECK(p2.c == std::vector<std::int64_t>{0, 2});

  // collapse to the trivial group: complete-graph parameters
  AbelianGroup trivial = make_group({1});
  RouxParameters pt = require_roux(pushforward(b, Homomorphism(c4, trivial, {0})));
  CHECK(pt.c == std::vector<std::int64_t>{2});
}

TEST_CASE("pushforward commutes with the Fourier transform") {
  Roux b = example_conference_roux();
  RouxParameters p = require_roux(b);
  AbelianGroup c2 = make_group({2});
  Homomorphism phi(b.group(), c2, {1});
  RouxParameters pushed = require_roux(pushforward(b, phi));
  for (int bi = 0; bi < 2; ++bi) {
    Character beta(c2, bi);
    // (beta o phi)(x) = zeta_2^{bi * (x mod 2)} = zeta_4^{2 bi x}
    Character composed(b.group(), 2 * bi);
    CHECK(pushed.fourier(beta) == p.fourier(composed));
  }
}

TEST_CASE("embed pads parameters with zeros; minimal_group undoes it") {
  // C2 roux: the complete graph pattern on the nonidentity element exists only
  // for n = 2 (c sums must work out); use the pushforward of the conference
  // roux instead, then embed it back into C4.
  Roux b = example_conference_roux();
  AbelianGroup c2 = make_group({2});
  Roux small = pushforward(b, Homomorphism(b.group(), c2, {1}));

  Homomorphism inj(c2, b.group(), {2});  // -1 generates the image
  Roux big = embed(small, inj);
  RouxParameters p = require_roux(big);
  CHECK(p.c == std::vector<std::int64_t>{0, 0, 2, 0});

  auto mg = minimal_group(big);
  CHECK(mg.members == std::vector<int>{0, 2});
  CHECK(mg.structure.group.orders() == std::vector<int>{2});
  RouxParameters reduced = require_roux(mg.reduced);
  CHECK(reduced.c == std::vector<std::int64_t>{0, 2});

  CHECK(embed(small, Homomorphism::identity(c2)) == small);
  CHECK_THROWS_AS(embed(small, Homomorphism(c2, b.group(), {0})), std::invalid_argument);
}

TEST_CASE("minimal group of the conference roux is all of C4") {
  auto mg = minimal_group(example_conference_roux());
  CHECK(mg.members.size() == 4);
  CHECK(mg.structure.group.orders() == std::vector<int>{4});
}

TEST_CASE("complete-graph roux embedded in C4 reduces to the trivial group") {
  AbelianGroup c4 = make_group({4});
  Roux b = complete_graph_roux(c4, 5);
  RouxParameters p = require_roux(b);
  CHECK(p.c == std::vector<std::int64_t>{3, 0, 0, 0});
  auto mg = minimal_group(b);
  CHECK(mg.members == std::vector<int>{0});
  CHECK(mg.structure.group.order() == 1);
}
