#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "burau_lab/matrix.hpp"

namespace burau_lab {

using Integer = mpz_class;

// Integer-coefficient Laurent polynomial in one variable t. Zero
// coefficients are never stored, so structural equality is ring equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Integer& coeff, int exponent);
  static LaurentPoly from_terms(const std::map<int, Integer>& terms);
  static LaurentPoly t() { return monomial(1, 1); }

  // Accepts the text form produced by to_string(), e.g. "1 - t + t^2 - t^-1".
  // Throws SyntaxError with the offending position.
  static LaurentPoly parse(std::string_view text);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<int, Integer>& terms() const noexcept { return terms_; }
  Integer coefficient(int exponent) const;

  // Precondition: nonzero.
  int min_exponent() const;
  int max_exponent() const;

  LaurentPoly shifted(int k) const;  // multiplied by t^k

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  std::map<int, Integer> terms_;
};

// Returns q with q * den == num, or throws NotDivisible. Long division runs
// from the lowest exponent upward.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den);

using LaurentMatrix = SquareMatrix<LaurentPoly>;

LaurentMatrix laurent_identity(std::size_t dim);
LaurentMatrix scalar_matrix(std::size_t dim, const LaurentPoly& value);

// Exact determinant (fraction-free Bareiss elimination; dim <= ~12 in practice).
LaurentPoly determinant(const LaurentMatrix& m);

std::string to_string(const LaurentMatrix& m);

}  // namespace burau_lab
