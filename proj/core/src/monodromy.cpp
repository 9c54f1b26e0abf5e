#include "burau_lab/monodromy.hpp"

#include <Eigen/SVD>

#include <optional>
#include <random>
#include <stdexcept>

#include "burau_lab/errors.hpp"

namespace burau_lab {

namespace {

std::optional<RowOperator<CyclotomicNumber>> as_row_operator(const CycloMatrix& m) {
  const std::size_t n = m.dim();
  std::optional<std::size_t> row;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const bool id = r == c ? m(r, c).is_one() : m(r, c).is_zero();
      if (id) continue;
      if (row && *row != r) return std::nullopt;
      row = r;
    }
  }
  RowOperator<CyclotomicNumber> op;
  op.dim = n;
  op.row = row.value_or(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (c == op.row || !m(op.row, c).is_zero()) op.entries.emplace_back(c, m(op.row, c));
  }
  return op;
}

RowOperator<CyclotomicNumber> invert(const RowOperator<CyclotomicNumber>& op) {
  const CyclotomicNumber* diag = nullptr;
  for (const auto& [c, v] : op.entries)
    if (c == op.row) diag = &v;
  const CyclotomicNumber diag_inv = diag->inverse();
  RowOperator<CyclotomicNumber> inv{op.dim, op.row, {}};
  for (const auto& [c, v] : op.entries) {
    inv.entries.emplace_back(c, c == op.row ? diag_inv : -(v * diag_inv));
  }
  return inv;
}

RowOperator<CyclotomicNumber> require_row_operator(const CycloMatrix& m) {
  auto op = as_row_operator(m);
  if (!op) throw std::logic_error("monodromy generator is not identity outside one row");
  return *op;
}

}  // namespace

MonodromyGenerators rho_generators(int strands, int m, const CyclotomicNumber& minus_q) {
  if (strands < 3 || strands > m - 1) {
    throw InvalidDims("need 3 <= n <= m - 1 (n = " + std::to_string(strands) +
                      ", m = " + std::to_string(m) + ")");
  }
  if (minus_q.is_zero()) throw ZeroInput("monodromy at -q = 0");
  const FieldPtr& field = minus_q.field();
  const CyclotomicNumber q = -minus_q;
  const auto dim = static_cast<std::size_t>(m - 2);

  MonodromyGenerators g{strands, m, minus_q, {}, {}};
  for (int i = 1; i < strands; ++i) {
    if (i > 1 && i < strands - 1) {
      CycloMatrix mat = cyclo_identity(field, dim);
      const auto r = static_cast<std::size_t>(i - 1);
      mat(r, r - 1) = minus_q;
      mat(r, r) = q;
      mat(r, r + 1) = CyclotomicNumber::integer(field, 1);
      g.mats.push_back(std::move(mat));
    } else {
      g.mats.push_back(ev_map(burau_generator(strands, i), minus_q, m).representative);
    }
    g.inverses.push_back(
        invert(require_row_operator(g.mats.back()))
            .to_matrix(CyclotomicNumber(field), CyclotomicNumber::integer(field, 1)));
  }
  return g;
}

CycloMatrix coordinate_action(int i, int m, const CyclotomicNumber& minus_q) {
  const int coords = m - 2;
  if (i < 1 || i > coords) throw InvalidDims("twist index outside the coordinate range");
  const FieldPtr& field = minus_q.field();
  const CyclotomicNumber q = -minus_q;
  const CyclotomicNumber one = CyclotomicNumber::integer(field, 1);
  // Row vector convention: entry (k, c) is the coefficient of z_k in the new z_c.
  CycloMatrix mat = cyclo_identity(field, static_cast<std::size_t>(coords));
  auto at = [&](int k, int c) -> CyclotomicNumber& {
    return mat(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(c - 1));
  };
  at(i, i) = q;
  if (i - 1 >= 1) at(i, i - 1) = -q;
  if (i + 1 <= coords) at(i, i + 1) = one;
  return mat;
}

CycloMatrix rho_of_word(const MonodromyGenerators& g, const BraidWord& w) {
  if (w.strands() != g.strands) throw DimensionMismatch("word strand count differs from generators");
  std::vector<RowOperator<CyclotomicNumber>> fwd, bwd;
  for (std::size_t k = 0; k < g.mats.size(); ++k) {
    fwd.push_back(require_row_operator(g.mats[k]));
    bwd.push_back(require_row_operator(g.inverses[k]));
  }
  CycloMatrix out = cyclo_identity(g.minus_q.field(), static_cast<std::size_t>(g.m - 2));
  for (const auto& l : w.letters()) {
    const auto idx = static_cast<std::size_t>(l.generator - 1);
    multiply_right(out, l.sign > 0 ? fwd[idx] : bwd[idx]);
  }
  return out;
}

bool diagram_check(const BraidWord& w, int m, const CyclotomicNumber& minus_q) {
  const auto gens = rho_generators(w.strands(), m, minus_q);
  const ProjectiveMatrix lhs = ev_map(burau_of_word(w), minus_q, m);
  return projectively_equal(lhs.representative, rho_of_word(gens, w));
}

DiagramAudit diagram_audit(int strands, int m, const CyclotomicNumber& minus_q, int num_words,
                           int max_length, std::uint64_t seed) {
  const auto gens = rho_generators(strands, m, minus_q);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length(1, std::max(1, max_length));
  DiagramAudit audit;
  audit.seed = seed;
  for (int k = 0; k < num_words; ++k) {
    const BraidWord w = random_word(strands, static_cast<std::size_t>(length(rng)), rng);
    const ProjectiveMatrix lhs = ev_map(burau_of_word(w), minus_q, m);
    ++audit.words;
    if (projectively_equal(lhs.representative, rho_of_word(gens, w))) ++audit.passed;
  }
  return audit;
}

Eigen::MatrixXcd to_complex_matrix(const CycloMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      out(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)).to_complex();
  return out;
}

Eigen::VectorXd eigenvalues(const HermitianForm& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Signature signature(const HermitianForm& h, double tol) {
  const Eigen::VectorXd ev = eigenvalues(h);
  const double radius = ev.size() ? ev.cwiseAbs().maxCoeff() : 0.0;
  Signature s;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (radius == 0.0 || std::abs(ev(i)) < tol * radius) {
      ++s.zero;
    } else if (ev(i) > 0) {
      ++s.positive;
    } else {
      ++s.negative;
    }
  }
  return s;
}

InvariantFormResult invariant_hermitian_form(const MonodromyGenerators& g, double tol) {
  const auto k = static_cast<Eigen::Index>(g.m - 2);
  const Eigen::Index unknowns = k * k;
  using cd = std::complex<double>;

  // Real basis of the Hermitian k x k matrices.
  std::vector<Eigen::MatrixXcd> basis;
  for (Eigen::Index a = 0; a < k; ++a) {
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(k, k);
    e(a, a) = 1.0;
    basis.push_back(e);
  }
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = a + 1; b < k; ++b) {
      Eigen::MatrixXcd sym = Eigen::MatrixXcd::Zero(k, k);
      sym(a, b) = sym(b, a) = 1.0;
      basis.push_back(sym);
      Eigen::MatrixXcd skew = Eigen::MatrixXcd::Zero(k, k);
      skew(a, b) = cd(0.0, 1.0);
      skew(b, a) = cd(0.0, -1.0);
      basis.push_back(skew);
    }
  }

  std::vector<Eigen::MatrixXcd> gens;
  for (const auto& m : g.mats) gens.push_back(to_complex_matrix(m));

  const auto gen_count = static_cast<Eigen::Index>(gens.size());
  Eigen::MatrixXd system(2 * k * k * gen_count, unknowns);
  for (Eigen::Index p = 0; p < unknowns; ++p) {
    for (Eigen::Index gi = 0; gi < gen_count; ++gi) {
      const auto& G = gens[static_cast<std::size_t>(gi)];
      const Eigen::MatrixXcd residual =
          G.adjoint() * basis[static_cast<std::size_t>(p)] * G - basis[static_cast<std::size_t>(p)];
      const Eigen::Index offset = 2 * k * k * gi;
      for (Eigen::Index e = 0; e < k * k; ++e) {
        system(offset + e, p) = residual(e % k, e / k).real();
        system(offset + k * k + e, p) = residual(e % k, e / k).imag();
      }
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double null_tol = 1e-8 * std::max(1.0, sv.size() ? sv(0) : 0.0);

  InvariantFormResult result;
  for (Eigen::Index col = 0; col < unknowns; ++col) {
    const double sigma = col < sv.size() ? sv(col) : 0.0;
    if (sigma > null_tol) continue;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(k, k);
    for (Eigen::Index p = 0; p < unknowns; ++p) h += svd.matrixV()(p, col) * basis[static_cast<std::size_t>(p)];
    h = 0.5 * (h + h.adjoint().eval());
    h /= h.norm();
    result.basis.push_back({h});
  }
  if (result.basis.empty()) throw NoInvariantForm("no invariant Hermitian form found");

  auto normalize = [&](HermitianForm h) {
    Signature s = signature(h, tol);
    if (s.positive > s.negative || (s.positive == s.negative && h.matrix.trace().real() < 0)) {
      h.matrix = -h.matrix;
    }
    return h;
  };

  std::optional<HermitianForm> chosen;
  for (const auto& h : result.basis) {
    HermitianForm n = normalize(h);
    const Signature s = signature(n, tol);
    if (s.positive == 1 && s.zero == 0) {
      chosen = n;
      break;
    }
  }
  result.chosen = chosen.value_or(normalize(result.basis.front()));
  result.chosen_signature = signature(result.chosen, tol);
  result.chosen_eigenvalues = eigenvalues(result.chosen);

  const double h_norm = result.chosen.matrix.norm();
  for (const auto& G : gens) {
    const double r = (G.adjoint() * result.chosen.matrix * G - result.chosen.matrix).norm() / h_norm;
    result.residual = std::max(result.residual, r);
  }
  return result;
}

}  // namespace burau_lab
