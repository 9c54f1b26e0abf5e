#include "burau_lab/cyclotomic.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "burau_lab/errors.hpp"

namespace burau_lab {

namespace {

// Exact quotient of a by a monic divisor b (coefficients low to high).
std::vector<Integer> divide_monic(std::vector<Integer> a, const std::vector<Integer>& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw NotDivisible("divisor degree exceeds dividend");
  std::vector<Integer> q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    const Integer c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t j = 0; j < db; ++j) {
    if (a[j] != 0) throw NotDivisible("cyclotomic polynomial division left a remainder");
  }
  return q;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(unsigned order) {
  if (order == 0) throw InvalidD("cyclotomic polynomial of order 0");
  static std::map<unsigned, std::vector<Integer>> memo;
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = memo.find(order); it != memo.end()) return it->second;
  }
  std::vector<Integer> poly(order + 1, Integer(0));
  poly[0] = -1;
  poly[order] = 1;
  for (unsigned k = 1; k < order; ++k) {
    if (order % k == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(k));
  }
  std::lock_guard lock(cache_mutex());
  memo.emplace(order, poly);
  return poly;
}

CyclotomicField::CyclotomicField(unsigned order)
    : order_(order), phi_(cyclotomic_polynomial(order)) {
  const std::size_t deg = degree();
  powers_.reserve(order_);
  std::vector<Integer> v(deg, Integer(0));
  v[0] = 1;
  for (unsigned k = 0; k < order_; ++k) {
    powers_.push_back(v);
    std::vector<Integer> next(deg + 1, Integer(0));
    for (std::size_t j = 0; j < deg; ++j) next[j + 1] = v[j];
    reduce(next);
    v = std::move(next);
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(unsigned order) {
  if (order == 0) throw InvalidD("cyclotomic field of order 0");
  static std::map<unsigned, std::shared_ptr<const CyclotomicField>> cache;
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = cache.find(order); it != cache.end()) return it->second;
  }
  auto field = std::make_shared<const CyclotomicField>(order);
  std::lock_guard lock(cache_mutex());
  return cache.emplace(order, std::move(field)).first->second;
}

const std::vector<Integer>& CyclotomicField::zeta_power(std::int64_t k) const {
  std::int64_t r = k % static_cast<std::int64_t>(order_);
  if (r < 0) r += order_;
  return powers_[static_cast<std::size_t>(r)];
}

void CyclotomicField::reduce(std::vector<Integer>& coeffs) const {
  const std::size_t deg = degree();
  for (std::size_t i = coeffs.size(); i-- > deg;) {
    const Integer c = coeffs[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) coeffs[i - deg + j] -= c * phi_[j];
  }
  coeffs.resize(deg, Integer(0));
}

CyclotomicNumber::CyclotomicNumber(FieldPtr field)
    : field_(std::move(field)), coeffs_(field_->degree(), Integer(0)) {}

CyclotomicNumber::CyclotomicNumber(FieldPtr field, std::vector<Integer> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  field_->reduce(coeffs_);
}

CyclotomicNumber CyclotomicNumber::integer(FieldPtr field, const Integer& value) {
  CyclotomicNumber x(std::move(field));
  x.coeffs_[0] = value;
  return x;
}

CyclotomicNumber CyclotomicNumber::zeta_power(FieldPtr field, std::int64_t k) {
  CyclotomicNumber x(field);
  x.coeffs_ = field->zeta_power(k);
  return x;
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

void CyclotomicNumber::require_same_field(const CyclotomicNumber& rhs) const {
  if (field_->order() != rhs.field_->order()) {
    throw FieldMismatch("cyclotomic orders " + std::to_string(order()) + " and " +
                        std::to_string(rhs.order()));
  }
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
  require_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
  require_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  a.require_same_field(b);
  const std::size_t deg = a.coeffs_.size();
  std::vector<Integer> acc(2 * deg - 1, Integer(0));
  for (std::size_t i = 0; i < deg; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpz_addmul(acc[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return CyclotomicNumber(a.field_, std::move(acc));
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return a.order() == b.order() && a.coeffs_ == b.coeffs_;
}

CyclotomicNumber CyclotomicNumber::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  CyclotomicNumber result = integer(field_, 1);
  CyclotomicNumber base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw ZeroInput("inverse of zero");
  auto ord = multiplicative_order(*this);
  if (!ord) throw NotDivisible("inverse of a non-root-of-unity is not implemented: " + to_string());
  return pow(*ord - 1);
}

std::complex<double> CyclotomicNumber::to_complex() const {
  std::complex<double> z = 0.0;
  const double step = 2.0 * std::numbers::pi / order();
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    z += coeffs_[j].get_d() * std::polar(1.0, step * static_cast<double>(j));
  }
  return z;
}

std::string CyclotomicNumber::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const std::string zeta = "zeta(" + std::to_string(order()) + ")";
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    const Integer& c = coeffs_[j];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << zeta;
    if (j != 1) os << "^" << j;
  }
  return os.str();
}

CycloMatrix cyclo_identity(const FieldPtr& field, std::size_t dim) {
  return CycloMatrix::identity(dim, CyclotomicNumber(field),
                               CyclotomicNumber::integer(field, 1));
}

CycloMatrix cyclo_scalar(const CyclotomicNumber& value, std::size_t dim) {
  CycloMatrix m(dim, CyclotomicNumber(value.field()));
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = value;
  return m;
}

CyclotomicNumber minus_q_from_d(int d, int numerator) {
  if (d < 2) throw InvalidD("d must be >= 2, got " + std::to_string(d));
  if (std::gcd(numerator, d) != 1) {
    throw InvalidD("numerator " + std::to_string(numerator) + " is not prime to d = " +
                   std::to_string(d));
  }
  // -q = exp(2 pi i (d + 2a) / (2d)); reduce the fraction to e / N.
  std::int64_t num = static_cast<std::int64_t>(d) + 2 * static_cast<std::int64_t>(numerator);
  const std::int64_t den = 2 * static_cast<std::int64_t>(d);
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  const auto order = static_cast<unsigned>(den / g);
  return CyclotomicNumber::zeta_power(CyclotomicField::get(order), num / g);
}

std::optional<std::int64_t> multiplicative_order(const CyclotomicNumber& x) {
  if (x.is_zero()) throw ZeroInput("multiplicative order of zero");
  const std::int64_t n = x.order();
  const std::int64_t bound = n % 2 == 0 ? n : 2 * n;
  CyclotomicNumber p = x;
  for (std::int64_t k = 1; k <= bound; ++k) {
    if (p.is_one()) return k;
    p = p * x;
  }
  return std::nullopt;
}

CyclotomicNumber specialize(const LaurentPoly& p, const CyclotomicNumber& x) {
  if (x.is_zero()) throw ZeroInput("specialization at zero");
  CyclotomicNumber out(x.field());
  if (p.is_zero()) return out;
  // Horner from the lowest exponent: p = t^lo * sum c_k t^(k - lo).
  const int lo = p.min_exponent();
  const int hi = p.max_exponent();
  CyclotomicNumber acc(x.field());
  for (int e = hi; e >= lo; --e) {
    acc = acc * x;
    const Integer c = p.coefficient(e);
    if (c != 0) acc += CyclotomicNumber::integer(x.field(), c);
  }
  return acc * x.pow(lo);
}

CycloMatrix specialize(const LaurentMatrix& m, const CyclotomicNumber& x) {
  CycloMatrix out(m.dim(), CyclotomicNumber(x.field()));
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = specialize(m(r, c), x);
  return out;
}

bool is_identity(const CycloMatrix& m) {
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (r == c ? !m(r, c).is_one() : !m(r, c).is_zero()) return false;
    }
  return true;
}

bool projectively_equal(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.dim() != b.dim()) return false;
  const std::size_t n = a.dim();
  std::size_t pr = n, pc = n;
  for (std::size_t r = 0; r < n && pr == n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!b(r, c).is_zero()) {
        pr = r;
        pc = c;
        break;
      }
  if (pr == n) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (!a(r, c).is_zero()) return false;
    return true;
  }
  const CyclotomicNumber& a_pivot = a(pr, pc);
  const CyclotomicNumber& b_pivot = b(pr, pc);
  if (a_pivot.is_zero()) return false;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (!(a(r, c) * b_pivot == b(r, c) * a_pivot)) return false;
    }
  return true;
}

namespace {

std::string render_grid(std::size_t dim, const std::vector<std::string>& cells) {
  std::size_t width = 1;
  for (const auto& s : cells) width = std::max(width, s.size());
  std::ostringstream os;
  for (std::size_t r = 0; r < dim; ++r) {
    os << "[ ";
    for (std::size_t c = 0; c < dim; ++c) {
      const std::string& s = cells[r * dim + c];
      os << std::string(width - s.size(), ' ') << s << (c + 1 < dim ? "  " : " ");
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace

std::string to_string(const CycloMatrix& m) {
  std::vector<std::string> cells;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) cells.push_back(m(r, c).to_string());
  return render_grid(m.dim(), cells);
}

std::string to_float_string(const CycloMatrix& m) {
  std::vector<std::string> cells;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) {
      auto z = m(r, c).to_complex();
      auto clean = [](double v) { return std::abs(v) < 1e-13 ? 0.0 : v; };
      std::ostringstream os;
      os << std::setprecision(12) << clean(z.real());
      const double im = clean(z.imag());
      os << (im < 0 ? "-" : "+") << std::setprecision(12) << std::abs(im) << "i";
      cells.push_back(os.str());
    }
  return render_grid(m.dim(), cells);
}

}  // namespace burau_lab
