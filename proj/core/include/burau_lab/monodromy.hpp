#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "burau_lab/braid_word.hpp"
#include "burau_lab/burau.hpp"
#include "burau_lab/cyclotomic.hpp"

namespace burau_lab {

// rho(sigma_i) acting on the m - 2 developing coordinates z_1..z_{m-2},
// for the n equal-curvature points, at parameter -q.
struct MonodromyGenerators {
  int strands;
  int m;
  CyclotomicNumber minus_q;
  std::vector<CycloMatrix> mats;
  std::vector<CycloMatrix> inverses;
};

// Interior generators (1 < i < n-1) use I_{i-2} (+) [[1,0,0],[-q,q,1],[0,0,1]]
// (+) I_{m-i-3}. The edge generators i = 1 and i = n-1 are defined as the
// ev(-q) representatives of the Burau generators. Throws InvalidDims unless
// 3 <= n <= m - 1.
MonodromyGenerators rho_generators(int strands, int m, const CyclotomicNumber& minus_q);

// The coordinate change induced by a half twist of b_i and b_{i+1}:
// z_i -> q z_i, z_{i-1} -> z_{i-1} - q z_i, z_{i+1} -> z_i + z_{i+1}, with
// coordinates outside 1..m-2 dropped. Used only as an independent
// cross-check of rho_generators.
CycloMatrix coordinate_action(int i, int m, const CyclotomicNumber& minus_q);

CycloMatrix rho_of_word(const MonodromyGenerators& g, const BraidWord& w);

// ev(-q)(beta_n(w)) and rho(w) agree up to a nonzero scalar.
bool diagram_check(const BraidWord& w, int m, const CyclotomicNumber& minus_q);

struct DiagramAudit {
  std::uint64_t seed = 0;
  int words = 0;
  int passed = 0;
  bool all_passed() const noexcept { return passed == words; }
};

// diagram_check on num_words random words of length 1..max_length.
DiagramAudit diagram_audit(int strands, int m, const CyclotomicNumber& minus_q, int num_words,
                           int max_length, std::uint64_t seed);

struct HermitianForm {
  Eigen::MatrixXcd matrix;
};

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

// Ascending eigenvalues.
Eigen::VectorXd eigenvalues(const HermitianForm& h);

// Eigenvalue sign counts; |lambda| < tol * spectral radius counts as zero.
Signature signature(const HermitianForm& h, double tol = 1e-9);

struct InvariantFormResult {
  // Orthonormal (Frobenius) basis of { H = H^* : G^* H G = H for all G }.
  std::vector<HermitianForm> basis;
  HermitianForm chosen;
  Signature chosen_signature;
  Eigen::VectorXd chosen_eigenvalues;
  // max_i |G_i^* H G_i - H|_F / |H|_F for the chosen form.
  double residual = 0.0;
};

// Solves the real-linear invariance equations by SVD over the float embedding
// zeta_N = exp(2 pi i / N). The chosen representative is scaled to unit
// Frobenius norm and sign-fixed so that positive eigenvalues are the
// minority; with several basis elements the first of signature (1, k) wins.
// Throws NoInvariantForm if the null space is empty.
InvariantFormResult invariant_hermitian_form(const MonodromyGenerators& g, double tol = 1e-9);

Eigen::MatrixXcd to_complex_matrix(const CycloMatrix& m);

}  // namespace burau_lab
