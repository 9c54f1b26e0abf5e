#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "burau_lab/laurent.hpp"
#include "burau_lab/matrix.hpp"

namespace burau_lab {

// Coefficients of the N-th cyclotomic polynomial, lowest degree first.
// Computed by dividing x^N - 1 by Phi_k for every proper divisor k of N.
std::vector<Integer> cyclotomic_polynomial(unsigned order);

unsigned euler_phi(unsigned n);

// Q(zeta_N) with the power basis 1, zeta, ..., zeta^(phi(N)-1). Instances are
// interned per N and shared by every number of that field.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(unsigned order);

  unsigned order() const noexcept { return order_; }
  std::size_t degree() const noexcept { return phi_.size() - 1; }
  const std::vector<Integer>& modulus() const noexcept { return phi_; }

  // Reduced coordinates of zeta^k; k is taken mod N.
  const std::vector<Integer>& zeta_power(std::int64_t k) const;

  // In-place reduction of a coefficient vector of any length modulo Phi_N.
  void reduce(std::vector<Integer>& coeffs) const;

  explicit CyclotomicField(unsigned order);

 private:
  unsigned order_;
  std::vector<Integer> phi_;
  std::vector<std::vector<Integer>> powers_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

// Element of Z[zeta_N], stored as reduced power-basis coordinates. Every
// value the library produces is a specialization of an integer Laurent
// polynomial, so integral coordinates suffice.
class CyclotomicNumber {
 public:
  explicit CyclotomicNumber(FieldPtr field);  // zero
  CyclotomicNumber(FieldPtr field, std::vector<Integer> coeffs);

  static CyclotomicNumber integer(FieldPtr field, const Integer& value);
  static CyclotomicNumber zeta_power(FieldPtr field, std::int64_t k);

  const FieldPtr& field() const noexcept { return field_; }
  unsigned order() const noexcept { return field_->order(); }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) {
    return a += b;
  }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) {
    return a -= b;
  }
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  // Nonnegative powers for any element; negative powers only for roots of unity.
  CyclotomicNumber pow(std::int64_t k) const;

  // Inverse of a root of unity. Throws ZeroInput for zero and NotDivisible for
  // anything else that is not a root of unity.
  CyclotomicNumber inverse() const;

  // Value at zeta_N = exp(2*pi*i/N).
  std::complex<double> to_complex() const;

  // "zeta(N)^k" combination, highest power first.
  std::string to_string() const;

 private:
  void require_same_field(const CyclotomicNumber& rhs) const;

  FieldPtr field_;
  std::vector<Integer> coeffs_;
};

using CycloMatrix = SquareMatrix<CyclotomicNumber>;

CycloMatrix cyclo_identity(const FieldPtr& field, std::size_t dim);
CycloMatrix cyclo_scalar(const CyclotomicNumber& value, std::size_t dim);

// The value -q for q = exp(2*pi*i*a/d), gcd(a, d) = 1, realized in Q(zeta_N)
// where N is the exact order of -q (2d for odd d, d for d = 0 mod 4, d/2 for
// d = 2 mod 4). The result is zeta_N^e for some e prime to N.
CyclotomicNumber minus_q_from_d(int d, int numerator = 1);

// Least k >= 1 with x^k = 1, or nullopt when x is not a root of unity. The
// roots of unity of Q(zeta_N) have order dividing lcm(2, N), which bounds the
// search.
std::optional<std::int64_t> multiplicative_order(const CyclotomicNumber& x);

// Ring homomorphism Z[t^+-1] -> Z[zeta_N], t -> x.
CyclotomicNumber specialize(const LaurentPoly& p, const CyclotomicNumber& x);
CycloMatrix specialize(const LaurentMatrix& m, const CyclotomicNumber& x);

bool is_identity(const CycloMatrix& m);

// a == c * b for some nonzero scalar c, decided by exact cross-multiplication.
bool projectively_equal(const CycloMatrix& a, const CycloMatrix& b);

std::string to_string(const CycloMatrix& m);
// Entries as complex floats with 12 significant digits.
std::string to_float_string(const CycloMatrix& m);

}  // namespace burau_lab
