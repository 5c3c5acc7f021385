#pragma once

#include "cantorlab/core.hpp"
#include "cantorlab/expansion.hpp"
#include "cantorlab/uniqueness.hpp"

#include <optional>
#include <vector>

namespace cantor {

/// s = I J^∞ with |I| = |J| = q and I ≼ J digitwise.
struct StrongPeriodicityWitness {
  std::size_t q;
  Word initial;   // I
  Word repeated;  // J
};

/// Whether j_{ℓ+q} ≥ j_ℓ for all ℓ ≥ 1.
bool dominates_shift(const EpSequence& s, std::size_t q);

/// Searches q ≤ |pre| + 2|per| + 2 for the shift-domination criterion and
/// returns the witness with the shortest blocks. The search is complete: a
/// valid q must be a multiple of the primitive period, and all multiples at
/// or beyond |pre| behave alike.
std::optional<StrongPeriodicityWitness> strong_periodicity_witness(const EpSequence& s);

/// (N−1−|t_ℓ|): the digit bounds of Γ_t = π(∏{0, …, N−1−|t_ℓ|}).
EpSequence derived_sequence(const TranslationCode& tc);

/// t ∈ 𝒮 iff t ∈ 𝒰 and the derived sequence is strongly periodic.
/// Throws std::invalid_argument if t has more than one code.
std::optional<StrongPeriodicityWitness> in_S(const TranslationCode& tc);

/// Maps x ↦ ratio·(x + s), s ∈ offsets.
struct IfsSpec {
  Rat ratio;
  std::vector<Rat> offsets;
};

/// ratio β^q, offsets β^{−q} Σ_{ℓ≤2q} j_ℓ β^{ℓ−1}(1−β)/(N−1) over j ≼ στ
/// with σ = I and τ = J − I.
IfsSpec build_ifs(const StrongPeriodicityWitness& w, const Params& p);

struct IfsVerification {
  bool verified;
  std::size_t depth;
  /// A point covered by exactly one of the two approximations.
  std::optional<Rat> witness;
};

/// Compares the level-K cover of π(∏{0, …, c_ℓ}) by cylinder hulls with its
/// image under the IFS applied to the level-(K−q) cover, K = max(depth, 2q).
IfsVerification verify_ifs(const IfsSpec& spec, const EpSequence& bounds, const Params& p,
                           std::size_t depth = 6);
IfsVerification verify_ifs(const IfsSpec& spec, const TranslationCode& tc, std::size_t depth = 6);

/// Merged closed intervals covering the level-k cylinders of π(∏{0, …, c_ℓ}).
std::vector<RatInterval> product_cover(const EpSequence& bounds, const Params& p, std::size_t k);

struct DimensionReport {
  RatInterval dim_h;
  RatInterval dim_p;
};

/// Σ_{period} log(N−|t_ℓ|)/(−r log β); Hausdorff and packing dimension agree
/// for eventually periodic codes.
DimensionReport dims(const TranslationCode& tc);

/// Ψ(ε) = N−1−|ε−N+1|, Ω_{2N−1} → Ω_N.
Digit psi(int n, Digit e);
Word psi_map(const Word& w);
EpSequence psi_map(const EpSequence& s);

struct BlockViolation {
  std::size_t position;
  Word block;
};

/// Occurrences of τN(N−1)^kN or τ̄(N−2)(N−1)^k(N−2), τ ∈ {N−2, N−1}.
std::vector<BlockViolation> forbidden_block_check(const Word& w);
std::vector<BlockViolation> forbidden_block_check(const EpSequence& s);

/// Membership of π(ε) − 1 in 𝒮 for ε over Ω_{2N−1}, decided through the
/// lexicographic uniqueness test and strong periodicity of Ψ(ε).
Verdict s_membership_shifted(const EpSequence& eps, const Params& p,
                             std::size_t cap = kDefaultDepthCap);

}  // namespace cantor
