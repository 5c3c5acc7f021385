#pragma once

#include "cantorlab/core.hpp"

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace cantor {

inline constexpr std::size_t kDefaultDepthCap = 4096;

/// Three-valued answer of a semi-decidable lexicographic test.
struct Verdict {
  enum class Kind { Yes, No, Undetermined };
  Kind kind;
  /// Digits inspected before the answer was reached (the cap when Undetermined).
  std::size_t depth = 0;

  static Verdict yes(std::size_t depth = 0) { return {Kind::Yes, depth}; }
  static Verdict no(std::size_t depth = 0) { return {Kind::No, depth}; }
  static Verdict undetermined(std::size_t depth) { return {Kind::Undetermined, depth}; }

  bool is_yes() const { return kind == Kind::Yes; }
  bool is_no() const { return kind == Kind::No; }
  bool is_undetermined() const { return kind == Kind::Undetermined; }
};

std::string to_string(Verdict v);

/// First L digits of the quasi-greedy β-expansion of x over Ω_m.
/// Requires 1/m < β < 1 and 0 < x ≤ (m−1)β/(1−β).
Word quasi_greedy(const Rat& x, const Rat& beta, int m, std::size_t length);

/// An infinite digit stream that lexicographic tests compare against.
class DigitReference {
 public:
  virtual ~DigitReference() = default;
  virtual int alphabet_size() const = 0;
  /// 0-based digit.
  virtual Digit digit(std::size_t i) const = 0;
  /// Generator state after i digits, if the stream is produced by a
  /// deterministic state machine. Equal states imply equal continuations.
  virtual std::optional<Rat> state(std::size_t) const { return std::nullopt; }
};

/// Lazily extended quasi-greedy expansion. The state after n digits is the
/// scaled remainder (x − Σ_{ℓ≤n} s_ℓβ^ℓ)/β^n.
class QuasiGreedyStream final : public DigitReference {
 public:
  QuasiGreedyStream(Rat x, Rat beta, int m);

  int alphabet_size() const override { return m_; }
  Digit digit(std::size_t i) const override;
  std::optional<Rat> state(std::size_t i) const override;
  Word prefix(std::size_t length) const;

  const Rat& beta() const { return beta_; }
  const Rat& target() const { return x_; }

 private:
  void extend_to(std::size_t n) const;

  Rat x_;
  Rat beta_;
  int m_;
  mutable std::mutex mutex_;
  mutable std::vector<Digit> digits_;
  mutable std::vector<Rat> states_;  // states_[n] = remainder after n digits
};

/// δ(β): the quasi-greedy expansion of 1 over Ω_m, memoized per (β, m).
std::shared_ptr<const QuasiGreedyStream> delta_stream(const Rat& beta, int m);
Word delta_of_beta(const Rat& beta, int m, std::size_t length);

/// Whether γ is the quasi-greedy expansion of 1, i.e. σ^k(γ) ≤ γ for all
/// k ≥ 1. Throws std::invalid_argument if γ is not an infinite β-expansion of 1.
bool is_quasi_greedy_valid(const EpSequence& gamma, const Rat& beta);

enum class RefOrder { Less, Equal, Greater, Tied };

struct RefComparison {
  RefOrder order;
  std::size_t depth;
};

/// Lexicographic comparison of x against a reference stream, digit by digit
/// up to `cap`. Equal is reported only when it is proven through a recurring
/// generator state at period-aligned positions.
RefComparison compare_with_reference(const EpSequence& x, const DigitReference& ref,
                                     std::size_t cap = kDefaultDepthCap);

/// Uniqueness of Σ ε_ℓ β^ℓ: for every k ≥ 1, σ^k(ε) < δ when ε_k < m−1 and
/// reflect(σ^k(ε)) < δ when ε_k > 0.
Verdict unique_expansion_test(const EpSequence& eps, const DigitReference& delta,
                              std::size_t cap = kDefaultDepthCap);
Verdict unique_expansion_test(const EpSequence& eps, const Rat& beta,
                              std::size_t cap = kDefaultDepthCap);

}  // namespace cantor
