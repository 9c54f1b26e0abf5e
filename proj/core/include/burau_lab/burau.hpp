#pragma once

#include <vector>

#include "burau_lab/braid_word.hpp"
#include "burau_lab/cyclotomic.hpp"
#include "burau_lab/laurent.hpp"

namespace burau_lab {

// beta_n(b) in GL_{n-1}(Z[t^+-1]).
struct BurauImage {
  int strands;
  LaurentMatrix matrix;
};

// The affine extension (A | v(A) // 0 | 1), dimension n.
struct AffineExtended {
  int strands;
  LaurentMatrix matrix;
};

// A representative of a class in PGL; equality is up to a nonzero scalar.
struct ProjectiveMatrix {
  CycloMatrix representative;

  friend bool operator==(const ProjectiveMatrix& a, const ProjectiveMatrix& b) {
    return projectively_equal(a.representative, b.representative);
  }
};

// Generator images, as identity-except-one-row operators. Words act by right
// multiplication on row vectors, so the image of w = x1 x2 ... xk is
// beta(x1) beta(x2) ... beta(xk).
//   1 < i < n-1 : I_{i-2} (+) [[1,0,0],[t,-t,1],[0,0,1]] (+) I_{n-i-2}
//   i = 1       : [[-t,1],[0,1]] (+) I_{n-3}
//   i = n-1     : I_{n-3} (+) [[1,0],[t,-t]]
// Inverses are exact and cached per (n, i).
const RowOperator<LaurentPoly>& burau_generator_operator(int strands, int i, bool inverse);

BurauImage burau_generator(int strands, int i, bool inverse = false);
BurauImage burau_of_word(const BraidWord& w);

// v(A) = (I - A) (1 - t, ..., 1 - t^{n-1})^T / (1 - t^n). Throws NotDivisible
// when A is not in the Burau image.
std::vector<LaurentPoly> crossed_v(const BurauImage& a);

AffineExtended affine_extension(const BurauImage& a);

// ev(-q) into PGL_{m-2}: extend, pad with I_{m-2-n} (or, for m = n + 1,
// delete the last row and column), then evaluate at t = -q.
ProjectiveMatrix ev_map(const BurauImage& a, const CyclotomicNumber& minus_q, int m);

// Burau specialized at a fixed t = -q with the generator operators
// precomputed; reuse one instance to evaluate many words.
class SpecializedBurau {
 public:
  SpecializedBurau(int strands, CyclotomicNumber minus_q);

  int strands() const noexcept { return strands_; }
  const CyclotomicNumber& minus_q() const noexcept { return minus_q_; }

  CycloMatrix operator()(const BraidWord& w) const;

  // Kernel membership is exact identity in GL, never projective.
  bool in_kernel(const BraidWord& w) const { return is_identity((*this)(w)); }

 private:
  int strands_;
  CyclotomicNumber minus_q_;
  std::vector<RowOperator<CyclotomicNumber>> forward_;
  std::vector<RowOperator<CyclotomicNumber>> backward_;
};

CycloMatrix specialized_burau(const BraidWord& w, const CyclotomicNumber& minus_q);

}  // namespace burau_lab
