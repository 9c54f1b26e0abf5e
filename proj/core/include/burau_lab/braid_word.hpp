#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace burau_lab {

// sigma_generator^sign, generator in [1, strands - 1], sign in {+1, -1}.
struct BraidLetter {
  int generator = 1;
  int sign = 1;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<BraidLetter> letters = {});

  int strands() const noexcept { return strands_; }
  const std::vector<BraidLetter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord power(int k) const;
  // Exponent sum.
  int writhe() const;

  BraidWord& operator*=(const BraidWord& rhs);
  friend BraidWord operator*(BraidWord a, const BraidWord& b) { return a *= b; }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  // Serializes in the parser grammar, e.g. "s1 s2^-1". The empty word is "".
  std::string to_string() const;

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

enum class TwistKind { half_twist_sigma, full_twist_tau };

// word  := term*
// term  := gen ('^' signed_int)?
// gen   := 's' INT | 'T' INT | '(' word ')'
// T<p> is the full twist (s1 s2 ... s_{p-1})^p on the first p strands.
// Throws SyntaxError (with position) or IndexOutOfRange.
BraidWord parse_word(std::string_view text, int strands);

// Cancels adjacent s_i s_i^-1 pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

// sigma -> s1; tau_p -> (s1 ... s_{p-1})^p. Throws InvalidSupport.
BraidWord canonical_twist_word(TwistKind kind, int support, int strands);

// Uniform random word of the given length over s_i^{+-1}.
BraidWord random_word(int strands, std::size_t length, std::mt19937_64& rng);

// Product of num_factors conjugates w g^{+-1} w^-1, g drawn from gens and
// |w| <= max_conj_len. Deterministic in seed.
BraidWord sample_normal_closure(int strands, std::span<const BraidWord> gens,
                                int num_factors, int max_conj_len,
                                std::uint64_t seed);

}  // namespace burau_lab
