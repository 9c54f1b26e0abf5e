#include "burau_lab/braid_word.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "burau_lab/errors.hpp"

namespace burau_lab {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw IndexOutOfRange("a braid needs at least 2 strands");
  for (const auto& l : letters_) {
    if (l.generator < 1 || l.generator >= strands_) {
      throw IndexOutOfRange("generator s" + std::to_string(l.generator) +
                            " outside [1, " + std::to_string(strands_ - 1) + "]");
    }
    if (l.sign != 1 && l.sign != -1) throw Error("letter sign must be +1 or -1");
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.sign = -l.sign;
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::power(int k) const {
  const BraidWord base = k < 0 ? inverse() : *this;
  BraidWord out(strands_);
  for (int i = 0; i < std::abs(k); ++i) out *= base;
  return out;
}

int BraidWord::writhe() const {
  int sum = 0;
  for (const auto& l : letters_) sum += l.sign;
  return sum;
}

BraidWord& BraidWord::operator*=(const BraidWord& rhs) {
  if (rhs.strands_ != strands_) {
    throw DimensionMismatch("cannot concatenate braids on " + std::to_string(strands_) +
                          " and " + std::to_string(rhs.strands_) + " strands");
  }
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << 's' << letters_[i].generator;
    if (letters_[i].sign < 0) os << "^-1";
  }
  return os.str();
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, int strands) : text_(text), strands_(strands) {}

  BraidWord parse() {
    BraidWord w = parse_word();
    if (!at_end()) throw SyntaxError(std::string("unexpected '") + peek() + "'", pos_);
    return w;
  }

 private:
  BraidWord parse_word() {
    BraidWord w(strands_);
    skip_ws();
    while (!at_end() && peek() != ')') {
      w *= parse_term();
      skip_ws();
    }
    return w;
  }

  BraidWord parse_term() {
    BraidWord base = parse_gen();
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      base = base.power(parse_signed_int());
    }
    return base;
  }

  BraidWord parse_gen() {
    const std::size_t start = pos_;
    const char c = peek();
    if (c == 's') {
      ++pos_;
      const int i = parse_unsigned();
      if (i < 1 || i >= strands_) {
        throw IndexOutOfRange("generator s" + std::to_string(i) + " at position " +
                              std::to_string(start) + " outside [1, " +
                              std::to_string(strands_ - 1) + "]");
      }
      return BraidWord(strands_, {{i, 1}});
    }
    if (c == 'T') {
      ++pos_;
      const int p = parse_unsigned();
      if (p < 2 || p > strands_) {
        throw IndexOutOfRange("twist T" + std::to_string(p) + " at position " +
                              std::to_string(start) + " needs 2 <= p <= " +
                              std::to_string(strands_));
      }
      return canonical_twist_word(TwistKind::full_twist_tau, p, strands_);
    }
    if (c == '(') {
      ++pos_;
      BraidWord inner = parse_word();
      if (at_end() || peek() != ')') throw SyntaxError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    throw SyntaxError(std::string("expected 's', 'T' or '(' but found '") + c + "'", pos_);
  }

  int parse_unsigned() {
    const std::size_t start = pos_;
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > std::numeric_limits<int>::max()) throw SyntaxError("integer too large", start);
      ++pos_;
    }
    if (start == pos_) throw SyntaxError("expected an integer", pos_);
    return static_cast<int>(v);
  }

  int parse_signed_int() {
    int sign = 1;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    return sign * parse_unsigned();
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  int strands_;
  std::size_t pos_ = 0;
};

}  // namespace

BraidWord parse_word(std::string_view text, int strands) {
  if (strands < 2) throw IndexOutOfRange("a braid needs at least 2 strands");
  return WordParser(text, strands).parse();
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<BraidLetter> stack;
  stack.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back().generator == l.generator &&
        stack.back().sign == -l.sign) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(w.strands(), std::move(stack));
}

BraidWord canonical_twist_word(TwistKind kind, int support, int strands) {
  if (strands < 2) throw InvalidSupport("a braid needs at least 2 strands");
  if (kind == TwistKind::half_twist_sigma) {
    if (support != 2) throw InvalidSupport("a half twist has support 2");
    return BraidWord(strands, {{1, 1}});
  }
  if (support < 2 || support > strands) {
    throw InvalidSupport("full twist support " + std::to_string(support) +
                         " outside [2, " + std::to_string(strands) + "]");
  }
  std::vector<BraidLetter> letters;
  letters.reserve(static_cast<std::size_t>(support) * (support - 1));
  for (int rep = 0; rep < support; ++rep)
    for (int i = 1; i < support; ++i) letters.push_back({i, 1});
  return BraidWord(strands, std::move(letters));
}

BraidWord random_word(int strands, std::size_t length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution flip(0.5);
  std::vector<BraidLetter> letters(length);
  for (auto& l : letters) {
    l.generator = gen(rng);
    l.sign = flip(rng) ? 1 : -1;
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord sample_normal_closure(int strands, std::span<const BraidWord> gens,
                                int num_factors, int max_conj_len,
                                std::uint64_t seed) {
  if (gens.empty()) throw EmptyGeneratorSet("normal closure of an empty set");
  if (num_factors < 1) throw Error("num_factors must be >= 1");
  if (max_conj_len < 0) throw Error("max_conj_len must be >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> conj_len(0, max_conj_len);
  std::bernoulli_distribution flip(0.5);

  BraidWord out(strands);
  for (int f = 0; f < num_factors; ++f) {
    const BraidWord& g = gens[pick(rng)];
    if (g.strands() != strands) throw IndexOutOfRange("generator strand count mismatch");
    const bool invert = flip(rng);
    const BraidWord w = random_word(strands, static_cast<std::size_t>(conj_len(rng)), rng);
    out *= w;
    out *= invert ? g.inverse() : g;
    out *= w.inverse();
  }
  return out;
}

}  // namespace burau_lab
