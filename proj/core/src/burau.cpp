#include "burau_lab/burau.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "burau_lab/errors.hpp"

namespace burau_lab {

namespace {

RowOperator<LaurentPoly> forward_operator(int strands, int i) {
  const LaurentPoly t = LaurentPoly::t();
  RowOperator<LaurentPoly> op;
  op.dim = static_cast<std::size_t>(strands - 1);
  op.row = static_cast<std::size_t>(i - 1);
  if (i > 1) op.entries.emplace_back(op.row - 1, t);
  op.entries.emplace_back(op.row, -t);
  if (i < strands - 1) op.entries.emplace_back(op.row + 1, LaurentPoly(1));
  return op;
}

// For G = I except row k, G^-1 = I except row k with entries 1/G_kk on the
// diagonal and -G_kc/G_kk elsewhere. G_kk = -t is a unit.
RowOperator<LaurentPoly> inverse_operator(const RowOperator<LaurentPoly>& op) {
  LaurentPoly diag;
  for (const auto& [c, v] : op.entries)
    if (c == op.row) diag = v;
  RowOperator<LaurentPoly> inv{op.dim, op.row, {}};
  for (const auto& [c, v] : op.entries) {
    if (c == op.row) {
      inv.entries.emplace_back(c, exact_divide(LaurentPoly(1), diag));
    } else {
      inv.entries.emplace_back(c, exact_divide(-v, diag));
    }
  }
  return inv;
}

}  // namespace

const RowOperator<LaurentPoly>& burau_generator_operator(int strands, int i, bool inverse) {
  if (strands < 2) throw IndexOutOfRange("a braid needs at least 2 strands");
  if (i < 1 || i >= strands) {
    throw IndexOutOfRange("generator index " + std::to_string(i) + " outside [1, " +
                          std::to_string(strands - 1) + "]");
  }
  // Write-once cache; node-based map keeps references stable.
  static std::mutex mutex;
  static std::map<std::tuple<int, int, bool>, std::unique_ptr<RowOperator<LaurentPoly>>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(strands, i, inverse);
  if (auto it = cache.find(key); it != cache.end()) return *it->second;
  auto fwd = forward_operator(strands, i);
  auto op = std::make_unique<RowOperator<LaurentPoly>>(inverse ? inverse_operator(fwd) : fwd);
  return *cache.emplace(key, std::move(op)).first->second;
}

BurauImage burau_generator(int strands, int i, bool inverse) {
  const auto& op = burau_generator_operator(strands, i, inverse);
  return {strands, op.to_matrix(LaurentPoly(), LaurentPoly(1))};
}

BurauImage burau_of_word(const BraidWord& w) {
  LaurentMatrix m = laurent_identity(static_cast<std::size_t>(w.strands() - 1));
  for (const auto& l : w.letters()) {
    multiply_right(m, burau_generator_operator(w.strands(), l.generator, l.sign < 0));
  }
  return {w.strands(), std::move(m)};
}

std::vector<LaurentPoly> crossed_v(const BurauImage& a) {
  const int n = a.strands;
  const auto dim = static_cast<std::size_t>(n - 1);
  if (a.matrix.dim() != dim) throw DimensionMismatch("Burau image has the wrong dimension");
  std::vector<LaurentPoly> column(dim);
  for (std::size_t k = 0; k < dim; ++k)
    column[k] = LaurentPoly(1) - LaurentPoly::monomial(1, static_cast<int>(k) + 1);
  const LaurentPoly denom = LaurentPoly(1) - LaurentPoly::monomial(1, n);

  std::vector<LaurentPoly> v(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    LaurentPoly acc;
    for (std::size_t c = 0; c < dim; ++c) {
      LaurentPoly entry = (r == c ? LaurentPoly(1) : LaurentPoly()) - a.matrix(r, c);
      if (!entry.is_zero()) acc += entry * column[c];
    }
    v[r] = exact_divide(acc, denom);
  }
  return v;
}

AffineExtended affine_extension(const BurauImage& a) {
  const auto v = crossed_v(a);
  const std::size_t dim = a.matrix.dim();
  LaurentMatrix ext(dim + 1, LaurentPoly());
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) ext(r, c) = a.matrix(r, c);
    ext(r, dim) = v[r];
  }
  ext(dim, dim) = LaurentPoly(1);
  return {a.strands, std::move(ext)};
}

ProjectiveMatrix ev_map(const BurauImage& a, const CyclotomicNumber& minus_q, int m) {
  const int n = a.strands;
  if (m < n + 1) {
    throw InvalidDims("ev(-q) needs m >= n + 1 (n = " + std::to_string(n) +
                      ", m = " + std::to_string(m) + ")");
  }
  if (minus_q.is_zero()) throw ZeroInput("ev(-q) at zero");
  const AffineExtended ext = affine_extension(a);
  const auto target = static_cast<std::size_t>(m - 2);
  LaurentMatrix padded = laurent_identity(target);
  const std::size_t keep = std::min(target, ext.matrix.dim());
  for (std::size_t r = 0; r < keep; ++r)
    for (std::size_t c = 0; c < keep; ++c) padded(r, c) = ext.matrix(r, c);
  return {specialize(padded, minus_q)};
}

SpecializedBurau::SpecializedBurau(int strands, CyclotomicNumber minus_q)
    : strands_(strands), minus_q_(std::move(minus_q)) {
  if (minus_q_.is_zero()) throw ZeroInput("specialization at zero");
  for (int i = 1; i < strands_; ++i) {
    for (bool inverse : {false, true}) {
      const auto& op = burau_generator_operator(strands_, i, inverse);
      RowOperator<CyclotomicNumber> spec{op.dim, op.row, {}};
      for (const auto& [c, v] : op.entries) spec.entries.emplace_back(c, specialize(v, minus_q_));
      (inverse ? backward_ : forward_).push_back(std::move(spec));
    }
  }
}

CycloMatrix SpecializedBurau::operator()(const BraidWord& w) const {
  if (w.strands() != strands_) {
    throw DimensionMismatch("word on " + std::to_string(w.strands()) +
                            " strands evaluated in B_" + std::to_string(strands_));
  }
  CycloMatrix m = cyclo_identity(minus_q_.field(), static_cast<std::size_t>(strands_ - 1));
  for (const auto& l : w.letters()) {
    const auto idx = static_cast<std::size_t>(l.generator - 1);
    multiply_right(m, l.sign > 0 ? forward_[idx] : backward_[idx]);
  }
  return m;
}

CycloMatrix specialized_burau(const BraidWord& w, const CyclotomicNumber& minus_q) {
  return SpecializedBurau(w.strands(), minus_q)(w);
}

}  // namespace burau_lab
