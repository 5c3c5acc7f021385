#pragma once

#include "cantorlab/core.hpp"
#include "cantorlab/expansion.hpp"

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <vector>

namespace cantor {

/// An Ω_{±N}-code (t_ℓ) of the translation t = π(t_ℓ) at fixed (N, β).
class TranslationCode {
 public:
  TranslationCode(EpSequence code, Params params);

  const EpSequence& code() const { return code_; }
  const Params& params() const { return params_; }
  const Rat& value() const { return value_; }

 private:
  EpSequence code_;
  Params params_;
  Rat value_;
};

/// Exact decision of t ∈ 𝒰: every tail T_k = Σ_ℓ t_{k+ℓ}β^ℓ satisfies
/// T_k < (1−Nβ)/(1−β) when t_k < N−1 and T_k > −(1−Nβ)/(1−β) when t_k > 1−N.
bool unique_exact(const TranslationCode& tc);

/// The same question through the quasi-greedy expansion of 1 over Ω_{2N−1}.
Verdict unique_lex(const TranslationCode& tc, std::size_t cap = kDefaultDepthCap);

/// Lexicographic test with δ replaced by λ(2N−1), i.e. at β = β_c.
/// `shifted` is a sequence over Ω_{2N−1}.
Verdict unique_lex_at_critical(const EpSequence& shifted, std::size_t cap = kDefaultDepthCap);

struct CodeEnumeration {
  /// counts[k] = number of length-k prefixes of codes of t (counts[0] = 1).
  std::vector<std::uint64_t> counts;
  /// Largest k with counts[j] = 1 for all j ≤ k.
  std::size_t consistent_depth = 0;
  /// Set when a level exceeded the node cap; later levels are absent.
  bool truncated = false;
  /// Prefix tree in breadth-first order (only when requested).
  struct Node {
    std::size_t parent;  // index into nodes; root has parent == index
    Digit digit;
    std::size_t depth;
  };
  std::vector<Node> nodes;
};

/// Branch-and-bound over prefixes whose scaled remainder stays in [−1, 1].
CodeEnumeration enum_codes(const Rat& t, const Params& p, std::size_t depth,
                           bool keep_tree = false, std::size_t node_cap = 1u << 16);

struct NeighborhoodProfile {
  /// max_size[k−1] = max |𝒩_t(J)| over J ∈ Λ_k.
  std::vector<int> max_size;
  /// survivors[k−1] = |Λ_k|.
  std::vector<Int> survivors;
  /// First level with a neighborhood of size 2, or 0 if none was found.
  std::size_t first_overlap = 0;
};

/// Neighborhood sizes per level. Components of level k of Γ and Γ+t are
/// tracked through the offsets (a_J − a_I − t)/β^k ∈ [−1, 1] of their left
/// endpoints; words J sharing an offset set behave identically below.
NeighborhoodProfile neighborhoods(const Rat& t, const Params& p, std::size_t depth,
                                  bool stop_at_overlap = false);

/// Explicit 𝒩_t(J) for every J ∈ Ω_N^k in lexicographic order, as lists
/// of the words I with ψ_I([t,1+t]) ∩ φ_J([0,1]) ≠ ∅.
std::vector<std::vector<Word>> neighborhood_sets(const Rat& t, const Params& p, std::size_t level);

/// Closed left/right endpoints of φ_J([0,1]).
RatInterval component(const Word& j, const Params& p);

struct DigitRange {
  Digit lo;
  Digit hi;
  int size() const { return hi - lo + 1; }
  bool operator==(const DigitRange&) const = default;
};

/// D_ℓ = Ω_N ∩ (Ω_N + t_ℓ) along the preperiod and one period of the code.
struct ConsecutiveProduct {
  std::vector<DigitRange> pre;
  std::vector<DigitRange> per;
  const DigitRange& at(std::size_t i) const {
    return i < pre.size() ? pre[i] : per[(i - pre.size()) % per.size()];
  }
};

DigitRange consecutive_digits(int n, Digit t);
/// Requires unique_exact(tc); throws std::invalid_argument otherwise.
ConsecutiveProduct consecutive_products(const TranslationCode& tc);

/// Block subshift over {ξ_n, η_n, ξ̄_n, η̄_n}.
struct SubshiftSpec {
  std::array<Word, 4> blocks;
  Eigen::Matrix4i adjacency;
};

Eigen::Matrix4i block_adjacency();
SubshiftSpec subshift_spec(int n_digits, unsigned n);

/// Coefficients c_0 … c_d (monic, c_d = 1) of det(xI − A).
std::vector<Int> characteristic_polynomial(const Eigen::MatrixXi& a);

/// Certified enclosure of the Perron root of a nonnegative integer matrix:
/// the largest real root of its characteristic polynomial, isolated with a
/// Sturm sequence.
RatInterval spectral_radius(const Eigen::MatrixXi& a, unsigned long bits = 64);

/// log r(A)/(−2^n log β). Requires β < β_n; throws std::invalid_argument otherwise.
RatInterval subshift_dim_bound(const Params& p, unsigned n);

/// Periodic element of X_A^{(n)}: a random walk of `blocks` steps closed by the
/// shortest return path, repeated forever. Deterministic in `seed`.
EpSequence subshift_sample(int n_digits, unsigned n, std::size_t blocks, std::uint64_t seed);

}  // namespace cantor
