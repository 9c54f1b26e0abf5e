#include <doctest.h>

#include <random>

#include "burau_lab/errors.hpp"
#include "burau_lab/monodromy.hpp"

using namespace burau_lab;

TEST_CASE("generator shapes") {
  const CyclotomicNumber m4 = minus_q_from_d(4);
  const FieldPtr& f = m4.field();
  const CyclotomicNumber qq = -m4;
  const CyclotomicNumber one = CyclotomicNumber::integer(f, 1);

  const auto g7 = rho_generators(4, 7, m4);
  REQUIRE(g7.mats.size() == 3);
  CycloMatrix interior = cyclo_identity(f, 5);
  interior(1, 0) = m4;
  interior(1, 1) = qq;
  interior(1, 2) = one;
  CHECK(g7.mats[1] == interior);

  const auto g5 = rho_generators(4, 5, m4);
  CycloMatrix first = cyclo_identity(f, 3);
  first(0, 0) = qq;
  first(0, 1) = one;
  CHECK(g5.mats[0] == first);

  for (int d : {5, 7, 8}) {
    const CyclotomicNumber x = minus_q_from_d(d);
    for (int n = 3; n <= 7; ++n) {
      const auto g = rho_generators(n, n + 1, x);
      for (int i = 1; i < n; ++i) {
        CHECK(g.mats[static_cast<std::size_t>(i - 1)] == specialize(burau_generator(n, i).matrix, x));
        CHECK(is_identity(g.mats[static_cast<std::size_t>(i - 1)] * g.inverses[static_cast<std::size_t>(i - 1)]));
      }
    }
  }
  CHECK_THROWS_AS(rho_generators(4, 4, m4), InvalidDims);
  CHECK_THROWS_AS(rho_generators(2, 5, m4), InvalidDims);
}

TEST_CASE("coordinate action reproduces the generators") {
  for (int d : {5, 6, 9}) {
    const CyclotomicNumber x = minus_q_from_d(d);
    for (int m = 5; m <= 8; ++m) {
      for (int n = 3; n <= m - 1; ++n) {
        const auto g = rho_generators(n, m, x);
        for (int i = 1; i < n; ++i) {
          if (i > m - 2) continue;
          CHECK(projectively_equal(g.mats[static_cast<std::size_t>(i - 1)], coordinate_action(i, m, x)));
        }
      }
    }
  }
}

TEST_CASE("braid relations for rho") {
  const CyclotomicNumber x = minus_q_from_d(7);
  for (int m = 5; m <= 8; ++m) {
    const auto g = rho_generators(m - 1, m, x);
    for (std::size_t i = 0; i + 1 < g.mats.size(); ++i) {
      for (std::size_t j = i + 1; j < g.mats.size(); ++j) {
        const auto& a = g.mats[i];
        const auto& b = g.mats[j];
        if (j == i + 1) {
          CHECK(a * b * a == b * a * b);
        } else {
          CHECK(a * b == b * a);
        }
      }
    }
  }
}

TEST_CASE("commutative diagram") {
  const CyclotomicNumber m5 = minus_q_from_d(5);
  for (int i = 1; i < 4; ++i) CHECK(diagram_check(BraidWord(4, {{i, 1}}), 6, m5));
  const DiagramAudit audit = diagram_audit(4, 6, m5, 100, 20, 0);
  CHECK(audit.words == 100);
  CHECK(audit.all_passed());

  // The central twist is a scalar, projectively trivial at m = n + 1.
  const BraidWord tau = canonical_twist_word(TwistKind::full_twist_tau, 4, 4);
  CHECK(diagram_check(tau, 5, m5));
  const ProjectiveMatrix image = ev_map(burau_of_word(tau), m5, 5);
  CHECK(image.representative == cyclo_scalar(m5.pow(4), 3));
  CHECK(image == ProjectiveMatrix{cyclo_identity(m5.field(), 3)});
}

TEST_CASE("signature") {
  HermitianForm h{Eigen::MatrixXcd::Zero(3, 3)};
  CHECK(signature(h) == Signature{0, 0, 3});
  h.matrix.diagonal() << 1.0, -1.0, -1.0;
  CHECK(signature(h) == Signature{1, 2, 0});
  h.matrix(2, 2) = 1e-12;
  CHECK(signature(h) == Signature{1, 1, 1});
}

TEST_CASE("invariant forms") {
  struct Case {
    int n, m, d;
    Signature expected;
  };
  for (const Case& c : {Case{3, 4, 7, {1, 1, 0}}, Case{5, 6, 8, {1, 3, 0}}, Case{4, 5, 7, {1, 2, 0}}}) {
    const auto g = rho_generators(c.n, c.m, minus_q_from_d(c.d));
    const auto form = invariant_hermitian_form(g);
    CHECK(form.chosen_signature == c.expected);
    CHECK(form.residual <= 1e-9);
    HermitianForm flipped{-form.chosen.matrix};
    CHECK(signature(flipped) == Signature{c.expected.negative, c.expected.positive, 0});
  }
}
