#include <doctest.h>

#include <numeric>

#include "../support/oracles.hpp"
#include "burau_lab/errors.hpp"
#include "burau_lab/moduli.hpp"

using namespace burau_lab;

namespace {

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

std::vector<std::string> labels(std::size_t equal, std::size_t total) {
  std::vector<std::string> out(total, "b");
  for (std::size_t i = 0; i < equal; ++i) out[i] = "a";
  return out;
}

std::vector<std::int64_t> orders(const OrbifoldReport& r) {
  std::vector<std::int64_t> out;
  for (const auto& s : r.strata) out.push_back(s.orbifold_order.value_or(-1));
  return out;
}

}  // namespace

TEST_CASE("cone angles") {
  CHECK(cone_angle(q(1, 4), q(1, 4), true) == q(1, 4));
  CHECK(cone_angle(q(1, 4), q(2, 4), false) == q(1, 4));
  CHECK_FALSE(cone_angle(q(3, 10), q(4, 5), false).has_value());
  CHECK_FALSE(cone_angle(q(1, 2), q(1, 2), false).has_value());
  CHECK(cone_angle(q(1, 6), q(1, 6), false) == q(2, 3));
  CHECK_THROWS_AS(cone_angle(q(0, 1), q(1, 2), false), InvalidFraction);
  CHECK_THROWS_AS(cone_angle(q(1, 1), q(1, 2), false), InvalidFraction);
  CHECK_THROWS_AS(cone_angle(q(1, 4), q(1, 3), true), InvalidFraction);
}

TEST_CASE("curvature vectors") {
  CHECK(CurvatureVector::parse("1/4,1/4,1/4,1/4,1/4,1/4,2/4").size() == 7);
  CHECK_THROWS_AS(CurvatureVector::parse("1/2,1/2"), InvalidCurvatures);
  CHECK_THROWS_AS(CurvatureVector::parse("1/2,1/2,1/2"), InvalidCurvatures);
  CHECK_THROWS_AS(CurvatureVector::parse("1/2,1/2,1"), InvalidCurvatures);
  CHECK_THROWS_AS(CurvatureVector::parse("1/2,x,1/2"), InvalidCurvatures);
  CHECK(CurvatureVector::parse("1/2, 3/4, 3/4").to_string() == "1/2,3/4,3/4");
}

TEST_CASE("orbifold check") {
  const auto k = CurvatureVector::parse("1/4,1/4,1/4,1/4,1/4,1/4,2/4");
  const auto r = orbifold_check(k, labels(6, 7));
  CHECK(r.is_orbifold);
  CHECK(orders(r) == std::vector<std::int64_t>{4, 4});
  CHECK(r.strata[0].pair_count == 15);
  CHECK(r.strata[1].pair_count == 6);

  const auto r58 = orbifold_check(CurvatureVector::parse("3/8,3/8,3/8,3/8,3/8,1/8"), labels(5, 6));
  CHECK(r58.is_orbifold);
  CHECK(orders(r58) == std::vector<std::int64_t>{8, 2});

  std::vector<Rational> twelve(12, q(1, 6));
  const auto r113 = orbifold_check(CurvatureVector(twelve), labels(11, 12));
  CHECK_FALSE(r113.is_orbifold);
  REQUIRE(r113.strata.size() == 2);
  CHECK(r113.strata[1].angle_fraction == q(2, 3));
  CHECK_FALSE(r113.strata[1].orbifold_order.has_value());

  CHECK_THROWS_AS(orbifold_check(k, labels(6, 6)), InvalidCurvatures);
  CHECK_THROWS_AS(orbifold_check(k, labels(7, 7)), InvalidCurvatures);
}

TEST_CASE("curvatures from (n, d)") {
  CHECK(curvatures_from_nd(5, 8).fractions() ==
        std::vector<Rational>{q(3, 8), q(3, 8), q(3, 8), q(3, 8), q(3, 8), q(1, 8)});
  CHECK(curvatures_from_nd(3, 7).fractions() ==
        std::vector<Rational>{q(5, 14), q(5, 14), q(5, 14), q(13, 14)});
  CHECK_THROWS_AS(curvatures_from_nd(4, 3), InvalidConfiguration);
  CHECK_THROWS_AS(curvatures_from_nd(2, 8), InvalidConfiguration);
  CHECK_THROWS_AS(curvatures_from_nd(3, 2), InvalidConfiguration);
}

TEST_CASE("kernel descriptors") {
  auto jl = [](int n, int d) {
    const auto a = kernel_descriptor(n, d);
    REQUIRE(a.descriptor);
    return std::pair{a.descriptor->j, a.descriptor->l};
  };
  CHECK(jl(4, 12) == std::pair{std::optional<std::int64_t>{4}, std::int64_t{3}});
  CHECK(jl(5, 8) == std::pair{std::optional<std::int64_t>{2}, std::int64_t{8}});
  CHECK(jl(6, 4) == std::pair{std::optional<std::int64_t>{4}, std::int64_t{2}});
  CHECK(jl(4, 6) == std::pair{std::optional<std::int64_t>{}, std::int64_t{3}});

  const auto inc = kernel_descriptor(11, 3);
  CHECK(inc.inconclusive());
  REQUIRE(inc.tau_stratum());
  CHECK(inc.tau_stratum()->angle_fraction == q(2, 3));
  CHECK_THROWS_AS(kernel_descriptor(4, 3), InvalidConfiguration);

  // The sigma stratum always has order d.
  for (int n = 3; n <= 12; ++n)
    for (int d = 3; d <= 30; ++d) {
      try {
        const auto a = kernel_descriptor(n, d);
        REQUIRE(a.sigma_stratum());
        CHECK(a.sigma_stratum()->orbifold_order == d);
      } catch (const InvalidConfiguration&) {
      }
    }
}

TEST_CASE("published table") {
  int exact = 0;
  for (const auto& row : published_kernel_table()) {
    const auto a = kernel_descriptor(row.n, row.d);
    REQUIRE(a.descriptor);
    const RowAgreement agreement = compare_with_published(row, *a.descriptor);
    CHECK(agreement != RowAgreement::mismatch);
    if (agreement == RowAgreement::exact) {
      ++exact;
    } else {
      CHECK(row.n == 4);
      CHECK(row.d == 8);
    }
    // The computed l is the order of (-q)^n, found here in floating point.
    CHECK(oracle::order(oracle::ipow(oracle::minus_q(row.d), row.n)) == a.descriptor->l);
    CHECK(central_power(row.n, row.d) == a.descriptor->l);
  }
  CHECK(exact == 18);
  CHECK(published_kernel_table().size() == 19);
}

TEST_CASE("normal generators") {
  const auto a = kernel_descriptor(5, 8);
  const auto gens = a.descriptor->normal_generators();
  REQUIRE(gens.size() == 3);
  CHECK(gens[0].size() == 8);
  CHECK(gens[1].size() == 2 * 12);
  CHECK(gens[2].size() == 8 * 20);
  CHECK(kernel_descriptor(4, 5).descriptor->normal_generators().size() == 2);
}

TEST_CASE("three strands") {
  for (int d = 7; d <= 60; ++d) {
    const KernelDescriptor k = b3_kernel(d);
    CHECK_FALSE(k.j.has_value());
    CHECK(k.l == 2 * d / std::gcd(12, d + 6));
    CHECK(oracle::order(oracle::ipow(oracle::minus_q(d), 3)) == k.l);
    CHECK(kernel_descriptor(3, d).descriptor == k);
  }
  CHECK(b3_kernel(7).l == 14);
  CHECK(b3_kernel(12).l == 4);
  CHECK_THROWS_AS(b3_kernel(6), InvalidD);
}
