#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "rouxlab/cyclotomic.hpp"

using namespace rouxlab;

TEST_CASE("rational arithmetic normalizes and compares") {
  Rational a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a + Rational(1, 2) == Rational(-1));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational::parse("7/3") == Rational(7, 3));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<std::int64_t>{1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
}

TEST_CASE("roots of unity satisfy the defining identities") {
  for (int L : {2, 3, 4, 5, 6, 8, 12}) {
    Cyclotomic z = Cyclotomic::root_of_unity(L, 1);
    Cyclotomic pow = Cyclotomic::one();
    for (int k = 0; k < L; ++k) pow = pow * z;
    CHECK(pow == Cyclotomic::one());
  }
  // prime sums vanish
  for (int p : {2, 3, 5, 7, 11}) {
    Cyclotomic sum = Cyclotomic::zero(p);
    for (int k = 0; k < p; ++k) sum += Cyclotomic::root_of_unity(p, k);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("zeta4 squared is -1, real and rational") {
  Cyclotomic i4 = Cyclotomic::root_of_unity(4, 1);
  Cyclotomic sq = i4 * i4;
  CHECK(sq == Cyclotomic(Rational(-1)));
  CHECK(cyclotomic_is_real(sq));
  CHECK(cyclotomic_is_rational(sq));
  CHECK_FALSE(cyclotomic_is_real(Cyclotomic::root_of_unity(3, 1)));
}

TEST_CASE("sqrt_if_integer") {
  CHECK(sqrt_if_integer(Cyclotomic(4)) == 2);
  CHECK(sqrt_if_integer(Cyclotomic(0)) == 0);
  CHECK(sqrt_if_integer(Cyclotomic(5)) == std::nullopt);
  CHECK(sqrt_if_integer(Cyclotomic(-4)) == std::nullopt);
  CHECK(sqrt_if_integer(Cyclotomic::root_of_unity(3, 1)) == std::nullopt);
}

TEST_CASE("conjugation and promotion agree with the numeric embedding") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int L : {3, 4, 6, 8, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> exps(L);
      for (auto& c : exps) c = Rational(coeff(rng));
      Cyclotomic x = Cyclotomic::from_exponents(L, exps);
      auto xc = x.to_complex();
      CHECK(std::abs(x.conj().to_complex() - std::conj(xc)) < 1e-9);
      CHECK(std::abs(x.promoted(2 * L).to_complex() - xc) < 1e-9);
      CHECK(x.conj().conj() == x);
    }
  }
}

TEST_CASE("mixed-level arithmetic promotes to the lcm") {
  Cyclotomic i4 = Cyclotomic::root_of_unity(4, 1);
  Cyclotomic w3 = Cyclotomic::root_of_unity(3, 1);
  Cyclotomic prod = i4 * w3;
  CHECK(prod == Cyclotomic::root_of_unity(12, 7));  // 1/4 + 1/3 = 7/12
  CHECK((i4 + w3).level() == 12);
}
