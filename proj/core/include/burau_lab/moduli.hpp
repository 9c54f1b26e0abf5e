#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "burau_lab/braid_word.hpp"

namespace burau_lab {

// Exact rational; every angle and curvature below is a fraction of 2*pi.
using Rational = mpq_class;

std::string to_string(const Rational& r);

// Curvatures k_i / 2pi. Each lies in (0, 1) and they sum to exactly 2
// (Gauss-Bonnet).
class CurvatureVector {
 public:
  explicit CurvatureVector(std::vector<Rational> fractions);

  // Comma-separated fractions, e.g. "1/4,1/4,2/4".
  static CurvatureVector parse(std::string_view text);

  std::size_t size() const noexcept { return fractions_.size(); }
  const Rational& operator[](std::size_t i) const { return fractions_[i]; }
  const std::vector<Rational>& fractions() const noexcept { return fractions_; }

  std::string to_string() const;

 private:
  std::vector<Rational> fractions_;
};

// Cone angle / 2pi around the stratum where two cone points collide:
//   same label : 1/2 - k
//   distinct   : 1 - (k_i + k_j)
// nullopt when the collision is impossible (k_i + k_j >= 1). Throws
// InvalidFraction for inputs outside (0, 1).
std::optional<Rational> cone_angle(const Rational& k_i, const Rational& k_j, bool same_label);

struct ConeStratum {
  // Representative colliding pair, 0-based, i < j.
  std::size_t i = 0;
  std::size_t j = 0;
  bool same_label = false;
  Rational angle_fraction;
  // Set iff angle_fraction == 1/order.
  std::optional<std::int64_t> orbifold_order;
  // Number of unordered point pairs colliding into this stratum.
  std::size_t pair_count = 0;
};

struct OrbifoldReport {
  bool is_orbifold = true;
  std::vector<ConeStratum> strata;
};

// Pairs are grouped into one stratum per unordered pair of label classes,
// since points sharing a label are interchangeable. Points with distinct
// labels always use the distinct-curvature formula. Throws InvalidCurvatures
// on a label count mismatch or when one label carries two curvatures.
OrbifoldReport orbifold_check(const CurvatureVector& k, std::span<const std::string> labels);

// k_* = (d - 2) / (2d) on n points and k_{n+1} = 2 - n k_*. Throws
// InvalidConfiguration when k_{n+1} falls outside (0, 1) or n, d < 3.
CurvatureVector curvatures_from_nd(int n, int d);

// 2d / gcd(2d, (d + 2) n): the order of (-q)^n.
std::int64_t central_power(int n, int d);

struct KernelDescriptor {
  int strands = 0;
  int d = 0;
  std::optional<std::int64_t> j;  // nullopt means infinite
  std::int64_t l = 0;

  // s1^d, T_{n-1}^j (when j is finite) and T_n^l.
  std::vector<BraidWord> normal_generators() const;

  friend bool operator==(const KernelDescriptor&, const KernelDescriptor&) = default;
};

struct KernelAnalysis {
  int n = 0;
  int d = 0;
  CurvatureVector curvatures;
  std::vector<std::string> labels;
  OrbifoldReport orbifold;
  // Empty when the completed moduli space is not an orbifold: the method
  // cannot identify the kernel.
  std::optional<KernelDescriptor> descriptor;

  bool inconclusive() const noexcept { return !descriptor.has_value(); }
  // Collision of two of the n equal points (the half twist).
  const ConeStratum* sigma_stratum() const;
  // Collision of one of them with the distinguished point; null if absent.
  const ConeStratum* tau_stratum() const;
};

KernelAnalysis kernel_descriptor(int n, int d);

// ker beta_3(-q) for d >= 7: j is always infinite and l = 2d / gcd(12, d + 6).
KernelDescriptor b3_kernel(int d);

struct PublishedRow {
  int n;
  int d;
  std::optional<std::int64_t> j;
  std::int64_t l;
};

// The 19 (n, d, j, l) rows of the published kernel table, as printed.
std::span<const PublishedRow> published_kernel_table();

enum class RowAgreement {
  exact,
  // j agrees; the printed l is a proper multiple of the computed l. The
  // computed value is the order of (-q)^n, so tau_n^l already lies in the
  // kernel and the printed power is not the generator. Only (4, 8) does this.
  printed_l_multiple,
  mismatch
};

RowAgreement compare_with_published(const PublishedRow& row, const KernelDescriptor& computed);

}  // namespace burau_lab
