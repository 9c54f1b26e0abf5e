#include <doctest.h>

#include <random>

#include "burau_lab/braid_word.hpp"
#include "burau_lab/burau.hpp"
#include "burau_lab/errors.hpp"

using namespace burau_lab;

namespace {

const LaurentPoly t = LaurentPoly::t();

LaurentMatrix from_rows(std::initializer_list<std::initializer_list<LaurentPoly>> rows) {
  LaurentMatrix m(rows.size(), LaurentPoly(0));
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (const auto& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

// Product of the dense generator matrices, no sparse updates.
LaurentMatrix dense_product(const BraidWord& w) {
  LaurentMatrix out = laurent_identity(static_cast<std::size_t>(w.strands() - 1));
  for (const auto& l : w.letters()) out = out * burau_generator(w.strands(), l.generator, l.sign < 0).matrix;
  return out;
}

LaurentPoly power(const LaurentPoly& p, int k) {
  LaurentPoly out = 1;
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

}  // namespace

TEST_CASE("generator matrices") {
  CHECK(burau_generator(4, 2).matrix == from_rows({{1, 0, 0}, {t, -t, 1}, {0, 0, 1}}));
  CHECK(burau_generator(4, 1).matrix == from_rows({{-t, 1, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(burau_generator(4, 3).matrix == from_rows({{1, 0, 0}, {0, 1, 0}, {0, t, -t}}));
  CHECK(burau_generator(3, 1).matrix == from_rows({{-t, 1}, {0, 1}}));
  CHECK(burau_generator(3, 2).matrix == from_rows({{1, 0}, {t, -t}}));
  CHECK(burau_generator(2, 1).matrix == from_rows({{-t}}));
  CHECK(burau_generator(4, 1, true).matrix * burau_generator(4, 1).matrix == laurent_identity(3));
  for (int n = 2; n <= 8; ++n)
    for (int i = 1; i < n; ++i)
      CHECK(burau_generator(n, i).matrix * burau_generator(n, i, true).matrix ==
            laurent_identity(static_cast<std::size_t>(n - 1)));
  CHECK_THROWS_AS(burau_generator(4, 4), IndexOutOfRange);
  CHECK_THROWS_AS(burau_generator(4, 0), IndexOutOfRange);
}

TEST_CASE("braid relations hold for n up to 10") {
  for (int n = 3; n <= 10; ++n) {
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const auto a = burau_generator(n, i).matrix, b = burau_generator(n, j).matrix;
        if (j == i + 1) {
          CHECK(a * b * a == b * a * b);
        } else {
          CHECK(a * b == b * a);
        }
      }
    }
  }
}

TEST_CASE("words") {
  CHECK(burau_of_word(BraidWord(4)).matrix == laurent_identity(3));
  for (int n = 3; n <= 10; ++n) {
    const BraidWord tau = canonical_twist_word(TwistKind::full_twist_tau, n, n);
    CHECK(burau_of_word(tau).matrix == scalar_matrix(static_cast<std::size_t>(n - 1), power(t, n)));
  }
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const BraidWord w = random_word(5, 12, rng);
    const LaurentMatrix m = burau_of_word(w).matrix;
    CHECK(m == dense_product(w));
    // det beta(s_i) = -t.
    const int wr = w.writhe();
    const LaurentPoly expected = wr >= 0 ? power(-t, wr) : power(-LaurentPoly::monomial(1, -1), -wr);
    CHECK(determinant(m) == expected);
    CHECK(burau_of_word(w * w.inverse()).matrix == laurent_identity(4));
  }
}

TEST_CASE("sigma^d and tau_{n-1}^j in closed form") {
  // beta(s1^d) = [[(-t)^d, (1 - (-t)^d)/(1 + t)], [0, 1]] (+) I.
  for (int d = 1; d <= 9; ++d) {
    const LaurentMatrix m = burau_of_word(parse_word("s1^" + std::to_string(d), 4)).matrix;
    const LaurentPoly td = power(-t, d);
    CHECK(m(0, 0) == td);
    CHECK(m(0, 1) == exact_divide(1 - td, 1 + t));
    CHECK(m(1, 1) == LaurentPoly(1));
    CHECK(m(2, 2) == LaurentPoly(1));
  }
  // beta(tau_{n-1}^j) = [[t^{(n-1)j} I, (1 - t^{(n-1)j})/(1 - t^{n-1}) (1 - t, ..., 1 - t^{n-2})^T], [0, 1]].
  for (int n = 4; n <= 6; ++n) {
    for (int j = 1; j <= 3; ++j) {
      const BraidWord w = canonical_twist_word(TwistKind::full_twist_tau, n - 1, n).power(j);
      const LaurentMatrix m = burau_of_word(w).matrix;
      const auto k = static_cast<std::size_t>(n - 2);
      const LaurentPoly top = power(t, (n - 1) * j);
      const LaurentPoly ratio = exact_divide(1 - top, 1 - power(t, n - 1));
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) CHECK(m(r, c) == (r == c ? top : LaurentPoly(0)));
        CHECK(m(r, k) == ratio * (1 - power(t, static_cast<int>(r) + 1)));
        CHECK(m(k, r) == LaurentPoly(0));
      }
      CHECK(m(k, k) == LaurentPoly(1));
    }
  }
}

TEST_CASE("crossed homomorphism") {
  const auto zero3 = std::vector<LaurentPoly>(3, LaurentPoly(0));
  CHECK(crossed_v(burau_generator(4, 2)) == zero3);
  CHECK(crossed_v(burau_generator(4, 1)) == zero3);
  CHECK(crossed_v(burau_generator(4, 3)) == std::vector<LaurentPoly>{0, 0, 1});
  CHECK(crossed_v(BurauImage{4, laurent_identity(3)}) == zero3);

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const BurauImage a = burau_of_word(random_word(5, 8, rng));
    const BurauImage b = burau_of_word(random_word(5, 8, rng));
    const BurauImage ab{5, a.matrix * b.matrix};
    const auto va = crossed_v(a), vb = crossed_v(b), vab = crossed_v(ab);
    for (std::size_t r = 0; r < 4; ++r) {
      LaurentPoly expected = va[r];
      for (std::size_t c = 0; c < 4; ++c) expected += a.matrix(r, c) * vb[c];
      CHECK(vab[r] == expected);
    }
  }
  // Not in the image: v has a genuine denominator.
  LaurentMatrix bad = laurent_identity(3);
  bad(0, 0) = 2;
  CHECK_THROWS_AS(crossed_v(BurauImage{4, bad}), NotDivisible);
}

TEST_CASE("affine extension") {
  for (int n = 3; n <= 9; ++n)
    for (int i = 1; i < n; ++i)
      CHECK(affine_extension(burau_generator(n, i)).matrix == burau_generator(n + 1, i).matrix);
  CHECK(affine_extension(BurauImage{4, laurent_identity(3)}).matrix == laurent_identity(4));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const BraidWord w1 = random_word(4, 10, rng), w2 = random_word(4, 10, rng);
    const auto lhs = affine_extension(BurauImage{4, burau_of_word(w1).matrix * burau_of_word(w2).matrix});
    CHECK(lhs.matrix == affine_extension(burau_of_word(w1)).matrix * affine_extension(burau_of_word(w2)).matrix);
    // Extending beta_4(w) is beta_5 of the same word.
    CHECK(affine_extension(burau_of_word(w1)).matrix == burau_of_word(BraidWord(5, w1.letters())).matrix);
  }
}

TEST_CASE("ev map") {
  const CyclotomicNumber m6 = minus_q_from_d(6);
  const ProjectiveMatrix e = ev_map(burau_generator(4, 1), m6, 5);
  CHECK(e.representative.dim() == 3);
  CHECK(e.representative == specialize(burau_generator(4, 1).matrix, m6));
  // [[zeta_6, 1], [0, 1]] (+) I_1, with -q = -zeta_6 printed as the (0, 0) entry negated.
  CHECK(std::abs(e.representative(0, 0).to_complex() - std::polar(1.0, 2 * 3.14159265358979323846 / 6)) < 1e-12);

  for (int d : {4, 5, 7}) {
    const CyclotomicNumber x = minus_q_from_d(d);
    const ProjectiveMatrix id = ev_map(BurauImage{4, laurent_identity(3)}, x, 6);
    CHECK(is_identity(id.representative));
    CHECK(id.representative.dim() == 4);
  }

  const CyclotomicNumber m4 = minus_q_from_d(4);
  const ProjectiveMatrix padded = ev_map(burau_generator(4, 3), m4, 6);
  CHECK(padded.representative == specialize(burau_generator(5, 3).matrix, m4));

  const ProjectiveMatrix wider = ev_map(burau_generator(4, 3), m4, 7);
  CHECK(wider.representative.dim() == 5);
  CHECK_THROWS_AS(ev_map(burau_generator(4, 3), m4, 4), InvalidDims);
}

TEST_CASE("specialized words") {
  const CyclotomicNumber m5 = minus_q_from_d(5);
  CHECK(is_identity(specialized_burau(parse_word("s1^5", 4), m5)));
  CHECK_FALSE(is_identity(specialized_burau(parse_word("s1^4", 4), m5)));
  // tau_{n-1} on five strands is T4; j = 2 at d = 8.
  CHECK(is_identity(specialized_burau(parse_word("T4^2", 5), minus_q_from_d(8))));
  CHECK_FALSE(is_identity(specialized_burau(parse_word("T4", 5), minus_q_from_d(8))));
  for (int k = 1; k <= 4; ++k) CHECK_FALSE(is_identity(specialized_burau(parse_word("T4", 4).power(k), m5)));
  CHECK(is_identity(specialized_burau(parse_word("T4^5", 4), m5)));
  // tau_3 has matrix order 10 at d = 5.
  for (int k = 1; k < 10; ++k) CHECK_FALSE(is_identity(specialized_burau(parse_word("T3", 4).power(k), m5)));
  CHECK(is_identity(specialized_burau(parse_word("T3^10", 4), m5)));

  const SpecializedBurau sb(4, m5);
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const BraidWord w = random_word(4, 15, rng);
    CHECK(sb(w) == specialize(burau_of_word(w).matrix, m5));
  }
}
