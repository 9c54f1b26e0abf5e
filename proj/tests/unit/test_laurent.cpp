#include <doctest.h>

#include <random>

#include "burau_lab/burau.hpp"
#include "burau_lab/errors.hpp"
#include "burau_lab/laurent.hpp"

using namespace burau_lab;

namespace {

const LaurentPoly t = LaurentPoly::t();

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4), lo(-3, 3), len(0, 5);
  std::map<int, Integer> terms;
  const int start = lo(rng);
  const int count = len(rng);
  for (int e = start; e < start + count; ++e) terms[e] = coeff(rng);
  return LaurentPoly::from_terms(terms);
}

}  // namespace

TEST_CASE("ring operations") {
  CHECK((1 - t) * (1 + t) == 1 - t * t);
  CHECK(LaurentPoly::monomial(1, -1) * t == LaurentPoly(1));
  CHECK((1 - t + t * t) + (t - t * t) == LaurentPoly(1));
  CHECK(-(1 - t) == t - 1);
  CHECK((t - t).is_zero());
  CHECK(LaurentPoly(0).is_zero());
}

TEST_CASE("exact division") {
  CHECK(exact_divide(1 - t * t, 1 - t) == 1 + t);
  CHECK(exact_divide(1 - t * t * t * t, 1 - t) == 1 + t + t * t + t * t * t);
  CHECK_THROWS_AS(exact_divide(1 - t + t * t, 1 - t), NotDivisible);
  CHECK_THROWS_AS(exact_divide(1, 0), ZeroInput);
  CHECK(exact_divide(LaurentPoly::monomial(3, -2), LaurentPoly::monomial(3, 5)) ==
        LaurentPoly::monomial(1, -7));
  CHECK_THROWS_AS(exact_divide(2 * t, 3 * t), NotDivisible);
}

TEST_CASE("division undoes multiplication") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly a = random_poly(rng);
    const LaurentPoly b = random_poly(rng);
    if (b.is_zero()) continue;
    CHECK(exact_divide(a * b, b) == a);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == LaurentPoly(0));
  }
}

TEST_CASE("printing and parsing") {
  CHECK(LaurentPoly(0).to_string() == "0");
  CHECK((1 - t).to_string() == "1 - t");
  const LaurentPoly p = LaurentPoly::monomial(-1, -1) + 1 - t + 2 * t * t;
  CHECK(p.to_string() == "-t^-1 + 1 - t + 2*t^2");
  CHECK(LaurentPoly::parse(p.to_string()) == p);
  CHECK(LaurentPoly::parse("2t - 3 t^-2") == 2 * t - LaurentPoly::monomial(3, -2));
  CHECK(LaurentPoly::parse("0").is_zero());
  CHECK_THROWS_AS(LaurentPoly::parse("1 + + t"), SyntaxError);
  CHECK_THROWS_AS(LaurentPoly::parse("t^"), SyntaxError);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = random_poly(rng);
    CHECK(LaurentPoly::parse(a.to_string()) == a);
  }
}

TEST_CASE("syntax errors report a position") {
  try {
    LaurentPoly::parse("1 - t^x");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("exponent queries") {
  const LaurentPoly p = LaurentPoly::monomial(2, -3) + t * t;
  CHECK(p.min_exponent() == -3);
  CHECK(p.max_exponent() == 2);
  CHECK(p.coefficient(-3) == 2);
  CHECK(p.coefficient(0) == 0);
  CHECK(p.shifted(3) == 2 + LaurentPoly::monomial(1, 5));
  CHECK_THROWS_AS(LaurentPoly(0).min_exponent(), ZeroInput);
}

TEST_CASE("matrices") {
  CHECK(laurent_identity(3) * laurent_identity(3) == laurent_identity(3));
  CHECK_THROWS_AS(laurent_identity(3) * laurent_identity(2), DimensionMismatch);

  const LaurentMatrix s1 = burau_generator(4, 1).matrix;
  const LaurentMatrix s1_inv = burau_generator(4, 1, true).matrix;
  const LaurentMatrix s2 = burau_generator(4, 2).matrix;
  CHECK(s1 * s1_inv == laurent_identity(3));
  CHECK(s1 * s2 * s1 == s2 * s1 * s2);

  CHECK(determinant(laurent_identity(4)) == LaurentPoly(1));
  CHECK(determinant(scalar_matrix(3, t)) == t * t * t);
  CHECK(determinant(s1) == -t);
  CHECK(determinant(s1_inv) == -LaurentPoly::monomial(1, -1));
}

TEST_CASE("matrix printing") {
  const LaurentMatrix s1 = burau_generator(3, 1).matrix;
  CHECK(to_string(s1) == "[ -t   1 ]\n[  0   1 ]\n");
}
