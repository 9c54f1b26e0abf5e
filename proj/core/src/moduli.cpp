#include "burau_lab/moduli.hpp"

#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "burau_lab/cyclotomic.hpp"
#include "burau_lab/errors.hpp"

namespace burau_lab {

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

Rational canonical(Rational r) {
  r.canonicalize();
  return r;
}

bool in_open_unit_interval(const Rational& r) { return r > 0 && r < 1; }

}  // namespace

CurvatureVector::CurvatureVector(std::vector<Rational> fractions)
    : fractions_(std::move(fractions)) {
  if (fractions_.size() < 3) throw InvalidCurvatures("need at least 3 cone points");
  Rational sum = 0;
  for (auto& f : fractions_) {
    f.canonicalize();
    if (!in_open_unit_interval(f)) {
      throw InvalidCurvatures("curvature " + f.get_str() + " (units of 2pi) is outside (0, 1)");
    }
    sum += f;
  }
  if (sum != 2) throw InvalidCurvatures("curvatures sum to " + sum.get_str() + ", not 2");
}

CurvatureVector CurvatureVector::parse(std::string_view text) {
  std::vector<Rational> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InvalidCurvatures("empty curvature entry");
    item = item.substr(b, e - b + 1);
    Rational r;
    if (r.set_str(item, 10) != 0 || r.get_den() == 0) {
      throw InvalidCurvatures("cannot parse curvature '" + item + "'");
    }
    out.push_back(canonical(r));
  }
  return CurvatureVector(std::move(out));
}

std::string CurvatureVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < fractions_.size(); ++i) {
    if (i) s += ",";
    s += fractions_[i].get_str();
  }
  return s;
}

std::optional<Rational> cone_angle(const Rational& k_i, const Rational& k_j, bool same_label) {
  if (!in_open_unit_interval(k_i) || !in_open_unit_interval(k_j)) {
    throw InvalidFraction("curvature fractions must lie in (0, 1)");
  }
  if (same_label && k_i != k_j) {
    throw InvalidFraction("points sharing a label must share a curvature");
  }
  if (k_i + k_j >= 1) return std::nullopt;
  if (same_label) return canonical(Rational(1, 2) - k_i);
  return canonical(1 - (k_i + k_j));
}

OrbifoldReport orbifold_check(const CurvatureVector& k, std::span<const std::string> labels) {
  if (labels.size() != k.size()) {
    throw InvalidCurvatures(std::to_string(labels.size()) + " labels for " +
                            std::to_string(k.size()) + " cone points");
  }
  std::map<std::string, Rational> label_curvature;
  for (std::size_t i = 0; i < k.size(); ++i) {
    auto [it, inserted] = label_curvature.try_emplace(labels[i], k[i]);
    if (!inserted && it->second != k[i]) {
      throw InvalidCurvatures("label '" + labels[i] + "' carries curvatures " +
                              it->second.get_str() + " and " + k[i].get_str());
    }
  }

  OrbifoldReport report;
  std::map<std::pair<std::string, std::string>, std::size_t> class_index;
  std::map<std::pair<std::string, std::string>, bool> empty_class;
  for (std::size_t i = 0; i < k.size(); ++i) {
    for (std::size_t j = i + 1; j < k.size(); ++j) {
      auto key = std::minmax(labels[i], labels[j]);
      std::pair<std::string, std::string> cls{key.first, key.second};
      if (auto it = class_index.find(cls); it != class_index.end()) {
        ++report.strata[it->second].pair_count;
        continue;
      }
      if (empty_class.contains(cls)) continue;
      const bool same = labels[i] == labels[j];
      auto angle = cone_angle(k[i], k[j], same);
      if (!angle) {
        empty_class.emplace(cls, true);
        continue;
      }
      ConeStratum s;
      s.i = i;
      s.j = j;
      s.same_label = same;
      s.angle_fraction = *angle;
      if (angle->get_num() == 1) s.orbifold_order = angle->get_den().get_si();
      s.pair_count = 1;
      class_index.emplace(cls, report.strata.size());
      report.strata.push_back(std::move(s));
    }
  }
  for (const auto& s : report.strata)
    if (!s.orbifold_order) report.is_orbifold = false;
  return report;
}

CurvatureVector curvatures_from_nd(int n, int d) {
  if (n < 3 || d < 3) {
    throw InvalidConfiguration("need n >= 3 and d >= 3 (got n = " + std::to_string(n) +
                               ", d = " + std::to_string(d) + ")");
  }
  const Rational k_star = canonical(Rational(d - 2, 2 * d));
  const Rational last = canonical(2 - n * k_star);
  if (!in_open_unit_interval(last)) {
    throw InvalidConfiguration("no admissible cone sphere for (n, d) = (" + std::to_string(n) +
                               ", " + std::to_string(d) + "): last curvature " +
                               last.get_str() + " is outside (0, 1)");
  }
  std::vector<Rational> fractions(static_cast<std::size_t>(n), k_star);
  fractions.push_back(last);
  return CurvatureVector(std::move(fractions));
}

std::int64_t central_power(int n, int d) {
  const std::int64_t two_d = 2 * static_cast<std::int64_t>(d);
  return two_d / std::gcd(two_d, static_cast<std::int64_t>(d + 2) * n);
}

std::vector<BraidWord> KernelDescriptor::normal_generators() const {
  std::vector<BraidWord> gens;
  gens.push_back(BraidWord(strands, {{1, 1}}).power(d));
  if (j) {
    gens.push_back(canonical_twist_word(TwistKind::full_twist_tau, strands - 1, strands)
                       .power(static_cast<int>(*j)));
  }
  gens.push_back(canonical_twist_word(TwistKind::full_twist_tau, strands, strands)
                     .power(static_cast<int>(l)));
  return gens;
}

const ConeStratum* KernelAnalysis::sigma_stratum() const {
  for (const auto& s : orbifold.strata)
    if (s.same_label) return &s;
  return nullptr;
}

const ConeStratum* KernelAnalysis::tau_stratum() const {
  for (const auto& s : orbifold.strata)
    if (!s.same_label) return &s;
  return nullptr;
}

KernelAnalysis kernel_descriptor(int n, int d) {
  CurvatureVector k = curvatures_from_nd(n, d);
  std::vector<std::string> labels(static_cast<std::size_t>(n), "a");
  labels.emplace_back("b");
  OrbifoldReport report = orbifold_check(k, labels);
  KernelAnalysis out{n, d, std::move(k), std::move(labels), std::move(report), std::nullopt};
  if (!out.orbifold.is_orbifold) return out;

  const ConeStratum* sigma = out.sigma_stratum();
  if (sigma == nullptr || sigma->orbifold_order != d) {
    throw std::logic_error("half-twist stratum order differs from d");
  }
  const ConeStratum* tau = out.tau_stratum();
  KernelDescriptor desc;
  desc.strands = n;
  desc.d = d;
  if (tau) desc.j = tau->orbifold_order;
  desc.l = central_power(n, d);
  out.descriptor = desc;
  return out;
}

KernelDescriptor b3_kernel(int d) {
  if (d < 7) throw InvalidD("the three-strand kernel formula needs d >= 7, got " + std::to_string(d));
  KernelAnalysis analysis = kernel_descriptor(3, d);
  if (!analysis.descriptor || analysis.descriptor->j) {
    throw std::logic_error("B_3 analysis must be an orbifold without a tau stratum");
  }
  const std::int64_t formula = 2 * static_cast<std::int64_t>(d) / std::gcd(12, d + 6);
  const auto order = multiplicative_order(minus_q_from_d(d).pow(3));
  if (analysis.descriptor->l != formula || order != formula) {
    throw std::logic_error("B_3 central power disagrees with the order of (-q)^3");
  }
  return *analysis.descriptor;
}

std::span<const PublishedRow> published_kernel_table() {
  static const std::array<PublishedRow, 19> table{{
      {4, 5, std::nullopt, 5},
      {4, 6, std::nullopt, 3},
      {4, 7, 14, 7},
      {4, 8, 8, 4},
      {4, 9, 6, 9},
      {4, 10, 5, 5},
      {4, 12, 4, 3},
      {4, 18, 3, 9},
      {5, 4, std::nullopt, 4},
      {5, 5, 5, 2},
      {5, 6, 3, 3},
      {5, 8, 2, 8},
      {6, 4, 4, 2},
      {6, 5, 2, 5},
      {7, 3, std::nullopt, 6},
      {7, 4, 2, 4},
      {8, 3, 6, 3},
      {9, 3, 3, 2},
      {10, 3, 2, 3},
  }};
  return table;
}

RowAgreement compare_with_published(const PublishedRow& row, const KernelDescriptor& computed) {
  if (row.n != computed.strands || row.d != computed.d || row.j != computed.j) {
    return RowAgreement::mismatch;
  }
  if (row.l == computed.l) return RowAgreement::exact;
  if (row.l > computed.l && row.l % computed.l == 0) return RowAgreement::printed_l_multiple;
  return RowAgreement::mismatch;
}

}  // namespace burau_lab
