#include <doctest.h>

#include <complex>
#include <random>

#include "rouxlab/abelian.hpp"

using namespace rouxlab;

TEST_CASE("make_group basics") {
  AbelianGroup c4 = make_group({4});
  CHECK(c4.order() == 4);
  CHECK(c4.exponent() == 4);

  AbelianGroup e8 = make_group({2, 2, 2});
  CHECK(e8.order() == 8);
  CHECK(e8.exponent() == 2);

  AbelianGroup c33 = make_group({3, 3});
  CHECK(c33.order() == 9);
  CHECK(c33.exponent() == 3);

  CHECK_THROWS_AS(make_group({0}), std::invalid_argument);
  CHECK_THROWS_AS(make_group({4, -2}), std::invalid_argument);

  // composition is componentwise addition
  AbelianGroup g = make_group({4, 6});
  int a = g.index({3, 5}), b = g.index({2, 4});
  CHECK(g.tuple(g.add(a, b)) == std::vector<int>{1, 3});
  CHECK(g.add(a, g.neg(a)) == g.identity());
  CHECK(g.element_order(g.index({1, 0})) == 4);
  CHECK(g.element_order(g.index({1, 1})) == 12);
}

TEST_CASE("character evaluation") {
  AbelianGroup c4 = make_group({4});
  Character alpha(c4, 1);
  GroupRingElement d1 = GroupRingElement::delta(c4, 1);
  CHECK(eval_character(alpha, d1) == Cyclotomic::root_of_unity(4, 1));

  // trivial character maps every delta to 1
  for (int g = 0; g < 4; ++g)
    CHECK(eval_character(Character(c4, 0), GroupRingElement::delta(c4, g)) == Cyclotomic::one());

  // sum over C3 vanishes at a nontrivial character
  AbelianGroup c3 = make_group({3});
  GroupRingElement s(c3);
  for (int g = 0; g < 3; ++g) s.add_coeff(g, 1);
  CHECK(eval_character(Character(c3, 1), s).is_zero());

  AbelianGroup other = make_group({5});
  CHECK_THROWS_AS(eval_character(Character(other, 1), d1), std::invalid_argument);
}

TEST_CASE("hat_c examples") {
  AbelianGroup c4 = make_group({4});
  Character alpha(c4, 1);

  // order on C4: index 0 = 1, 1 = i, 2 = -1, 3 = -i
  std::vector<std::int64_t> hoggar = {24, 16, 6, 16};
  CHECK(hat_c(hoggar, alpha) == Cyclotomic(18));

  // trivial character gives the parameter sum
  CHECK(hat_c(hoggar, Character(c4, 0)) == Cyclotomic(62));

  std::vector<std::int64_t> conference = {0, 1, 0, 1};
  CHECK(hat_c(conference, alpha).is_zero());
}

TEST_CASE("character orthogonality, exact, all groups up to order 16") {
  std::vector<std::vector<int>> groups = {{2},    {3},    {4},    {5},   {2, 2}, {6},
                                          {7},    {8},    {2, 4}, {2, 2, 2},    {9},
                                          {3, 3}, {12},   {2, 6}, {16},  {4, 4}, {2, 8}};
  for (const auto& orders : groups) {
    AbelianGroup g = make_group(orders);
    if (g.order() > 16) continue;
    for (int a = 0; a < g.order(); ++a) {
      for (int b = 0; b < g.order(); ++b) {
        Character alpha(g, a), beta(g, b);
        Cyclotomic sum = Cyclotomic::zero(g.exponent());
        for (int x = 0; x < g.order(); ++x) sum += alpha(x) * beta(x).conj();
        CHECK(sum == (a == b ? Cyclotomic(g.order()) : Cyclotomic(0)));
      }
    }
  }
}

TEST_CASE("character evaluation is a ring homomorphism on random elements") {
  std::mt19937 rng(42);
  for (const auto& orders : std::vector<std::vector<int>>{{4}, {3, 3}, {2, 4}, {6}}) {
    AbelianGroup g = make_group(orders);
    std::uniform_int_distribution<int> elem(0, g.order() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
      GroupRingElement x(g), y(g);
      for (int t = 0; t < 3; ++t) {
        x.add_coeff(elem(rng), coeff(rng));
        y.add_coeff(elem(rng), coeff(rng));
      }
      Character alpha(g, elem(rng));
      CHECK(eval_character(alpha, x * y) == eval_character(alpha, x) * eval_character(alpha, y));
      CHECK(eval_character(alpha, x.star()) == eval_character(alpha, x).conj());
    }
  }
}

TEST_CASE("homomorphisms validate the order relations") {
  AbelianGroup c4 = make_group({4});
  AbelianGroup c2 = make_group({2});
  Homomorphism sq(c4, c2, {1});  // z -> z^2 pattern: generator 1 -> generator of C2
  CHECK(sq(0) == 0);
  CHECK(sq(1) == 1);
  CHECK(sq(2) == 0);
  CHECK_FALSE(sq.is_injective());

  // generator of order 4 cannot land on an element of order 3
  AbelianGroup c3 = make_group({3});
  CHECK_THROWS_AS(Homomorphism(c4, c3, {1}), std::invalid_argument);

  Homomorphism inj(c2, c4, {2});
  CHECK(inj.is_injective());
}

TEST_CASE("subgroup decomposition recovers cyclic structure") {
  AbelianGroup c4 = make_group({4});
  auto full = decompose_subgroup(c4, {0, 1, 2, 3});
  CHECK(full.group.orders() == std::vector<int>{4});

  auto half = decompose_subgroup(c4, {0, 2});
  CHECK(half.group.orders() == std::vector<int>{2});
  CHECK(half.to_abstract.at(2) == 1);

  AbelianGroup g24 = make_group({2, 4});
  std::vector<int> all(g24.order());
  for (int i = 0; i < g24.order(); ++i) all[i] = i;
  auto s = decompose_subgroup(g24, all);
  CHECK(s.group.order() == 8);
  CHECK(s.group.exponent() == 4);
  // round trip through the isomorphism is the identity
  for (int i = 0; i < s.group.order(); ++i) CHECK(s.to_abstract.at(s.from_abstract[i]) == i);
  // and it is a homomorphism
  for (int a = 0; a < s.group.order(); ++a)
    for (int b = 0; b < s.group.order(); ++b)
      CHECK(s.to_abstract.at(g24.add(s.from_abstract[a], s.from_abstract[b])) ==
            s.group.add(a, b));
}

TEST_CASE("subgroup generated by elements") {
  AbelianGroup g = make_group({2, 4});
  auto sub = subgroup_generated(g, {g.index({0, 2})});
  CHECK(sub.size() == 2);
  auto everything = subgroup_generated(g, {g.index({1, 0}), g.index({0, 1})});
  CHECK(everything.size() == 8);
  auto trivial = subgroup_generated(g, {});
  CHECK(trivial.size() == 1);
}
