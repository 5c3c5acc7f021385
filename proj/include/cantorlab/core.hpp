#pragma once

#include "cantorlab/rational.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cantor {

using Digit = std::int32_t;

/// Digit alphabets used throughout: Ω_m = {0, …, m−1} and the signed
/// alphabet Ω_{±N} = {−(N−1), …, N−1}.
class Alphabet {
 public:
  enum class Kind { Unsigned, Signed };

  static Alphabet unsigned_digits(int m);
  static Alphabet signed_digits(int n);

  Kind kind() const { return kind_; }
  int parameter() const { return param_; }
  Digit min_digit() const { return kind_ == Kind::Unsigned ? 0 : 1 - param_; }
  Digit max_digit() const { return param_ - 1; }
  bool contains(Digit d) const { return min_digit() <= d && d <= max_digit(); }
  int size() const { return max_digit() - min_digit() + 1; }

  /// d ↦ m−1−d on Ω_m, d ↦ −d on Ω_{±N}.
  Digit reflect(Digit d) const { return min_digit() + max_digit() - d; }

  std::string name() const;

  bool operator==(const Alphabet&) const = default;

 private:
  Alphabet(Kind kind, int param) : kind_(kind), param_(param) {}
  Kind kind_;
  int param_;
};

/// Finite digit string over a declared alphabet.
class Word {
 public:
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  Word(Alphabet alphabet, std::vector<Digit> digits);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }
  std::span<const Digit> digits() const { return digits_; }
  auto begin() const { return digits_.begin(); }
  auto end() const { return digits_.end(); }

  Word slice(std::size_t pos, std::size_t len) const;
  Word repeat(std::size_t times) const;
  Word reflect() const;
  void push_back(Digit d);

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) = default;
  /// Lexicographic; equal-length blocks compare digit by digit.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  Alphabet alphabet_;
  std::vector<Digit> digits_;
};

std::string to_string(const Word& w, std::string_view sep = ",");

/// Eventually periodic sequence `preperiod · period^∞`, held in canonical
/// form: primitive period and shortest preperiod. Two sequences are equal
/// as infinite strings iff their canonical forms are equal.
class EpSequence {
 public:
  EpSequence(Word preperiod, Word period);
  static EpSequence periodic(Word period);

  const Alphabet& alphabet() const { return pre_.alphabet(); }
  const Word& preperiod() const { return pre_; }
  const Word& period() const { return per_; }

  /// Digit at 0-based position i.
  Digit at(std::size_t i) const;
  Word prefix(std::size_t length) const;

  /// Number of distinct shifts σ^k, k ≥ 0.
  std::size_t orbit_size() const { return pre_.size() + per_.size(); }

  bool operator==(const EpSequence&) const = default;

 private:
  void canonicalize();
  Word pre_;
  Word per_;
};

/// Exact lexicographic order of two sequences over the same alphabet.
std::strong_ordering lex_compare(const EpSequence& a, const EpSequence& b);

EpSequence reflect(const EpSequence& s);
EpSequence shift(const EpSequence& s, std::size_t k);

/// Digitwise map into another alphabet; fn must land inside `target`.
template <typename Fn>
EpSequence map_digits(const EpSequence& s, Alphabet target, Fn fn) {
  std::vector<Digit> pre, per;
  for (Digit d : s.preperiod()) pre.push_back(fn(d));
  for (Digit d : s.period()) per.push_back(fn(d));
  return EpSequence(Word(target, std::move(pre)), Word(target, std::move(per)));
}

/// (N, β) with β an exact rational strictly inside (1/(2N−1), 1/N).
class Params {
 public:
  Params(int n, Rat beta);

  int n() const { return n_; }
  const Rat& beta() const { return beta_; }
  /// (1−β)/(N−1), the digit weight of the projection.
  Rat digit_scale() const { return (1 - beta_) / (n_ - 1); }
  /// (1−Nβ)/(1−β), the uniqueness threshold on tails.
  Rat tail_threshold() const { return (1 - n_ * beta_) / (1 - beta_); }

  Alphabet cantor_alphabet() const { return Alphabet::unsigned_digits(n_); }
  Alphabet signed_alphabet() const { return Alphabet::signed_digits(n_); }
  Alphabet shifted_alphabet() const { return Alphabet::unsigned_digits(2 * n_ - 1); }

 private:
  int n_;
  Rat beta_;
};

/// Σ_{ℓ≥1} s_ℓ β^{ℓ−1}, closed form over the period.
Rat weighted_sum(const EpSequence& s, const Rat& beta);

/// π_Ω(J) = Σ j_ℓ β^{ℓ−1}(1−β)/(N−1).
Rat pi_eval(const EpSequence& code, const Params& params);
Rat pi_eval(const Word& prefix, const Params& params);

/// Σ_{ℓ≥1} s_ℓ β^ℓ.
Rat beta_series_eval(const EpSequence& s, const Rat& beta);

/// Ω_{±N} → Ω_{2N−1}, d ↦ d + N − 1, and its inverse.
EpSequence to_shifted_code(const EpSequence& code);
EpSequence to_signed_code(const EpSequence& code);

/// Parses `"<pre>|<per>"` with comma-separated digits, e.g. `"-1,0|2,-2"`.
EpSequence parse_code(std::string_view text, Alphabet alphabet);
std::string format_code(const EpSequence& s);

}  // namespace cantor
