#include "burau_lab/laurent.hpp"

#include <cctype>
#include <sstream>

#include "burau_lab/errors.hpp"

namespace burau_lab {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, Integer(constant));
}

LaurentPoly LaurentPoly::monomial(const Integer& coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, Integer>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) {
    if (c != 0) p.terms_.emplace(e, c);
  }
  return p;
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw ZeroInput("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw ZeroInput("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + k, c);
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<int, Integer> acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      acc[ea + eb] += ca * cb;
    }
  }
  return LaurentPoly::from_terms(acc);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "t";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    LaurentPoly result;
    skip_ws();
    if (at_end()) throw SyntaxError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw SyntaxError("expected '+' or '-'", pos_);
      }
      first = false;
      result += parse_term(sign);
      skip_ws();
    }
    return result;
  }

 private:
  LaurentPoly parse_term(int sign) {
    Integer coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_unsigned();
      have_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 't') throw SyntaxError("expected 't' after '*'", pos_);
      }
    }
    int exponent = 0;
    if (!at_end() && peek() == 't') {
      ++pos_;
      exponent = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        exponent = parse_signed_int();
      }
    } else if (!have_coeff) {
      throw SyntaxError("expected coefficient or 't'", pos_);
    }
    return LaurentPoly::monomial(coeff * sign, exponent);
  }

  Integer parse_unsigned() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw SyntaxError("expected digits", pos_);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  int parse_signed_int() {
    int sign = 1;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    std::size_t start = pos_;
    Integer v = parse_unsigned();
    if (!v.fits_sint_p()) throw SyntaxError("exponent out of range", start);
    return sign * static_cast<int>(v.get_si());
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  return PolyParser(text).parse();
}

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw ZeroInput("division by the zero polynomial");
  if (num.is_zero()) return {};

  const int den_low = den.min_exponent();
  const Integer& den_low_coeff = den.terms().begin()->second;
  const int max_quotient_exp = num.max_exponent() - den.max_exponent();

  std::map<int, Integer> quotient;
  LaurentPoly rem = num;
  while (!rem.is_zero()) {
    const int e = rem.min_exponent() - den_low;
    const Integer& c = rem.terms().begin()->second;
    if (e > max_quotient_exp || !mpz_divisible_p(c.get_mpz_t(), den_low_coeff.get_mpz_t())) {
      throw NotDivisible("(" + num.to_string() + ") is not divisible by (" +
                         den.to_string() + ")");
    }
    Integer qc = c / den_low_coeff;
    rem -= den * LaurentPoly::monomial(qc, e);
    quotient.emplace(e, qc);
  }
  return LaurentPoly::from_terms(quotient);
}

LaurentMatrix laurent_identity(std::size_t dim) {
  return LaurentMatrix::identity(dim, LaurentPoly(), LaurentPoly(1));
}

LaurentMatrix scalar_matrix(std::size_t dim, const LaurentPoly& value) {
  LaurentMatrix m(dim, LaurentPoly());
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = value;
  return m;
}

LaurentPoly determinant(const LaurentMatrix& input) {
  const std::size_t n = input.dim();
  if (n == 0) return LaurentPoly(1);
  LaurentMatrix m = input;
  LaurentPoly prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k).is_zero()) ++swap;
      if (swap == n) return {};
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_divide(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = LaurentPoly();
    }
    prev = m(k, k);
  }
  return sign < 0 ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

std::string to_string(const LaurentMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) {
      cells.push_back(m(r, c).to_string());
      width = std::max(width, cells.back().size());
    }
  std::ostringstream os;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    os << "[ ";
    for (std::size_t c = 0; c < m.dim(); ++c) {
      const std::string& s = cells[r * m.dim() + c];
      os << std::string(width - s.size(), ' ') << s << (c + 1 < m.dim() ? "  " : " ");
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace burau_lab
