#pragma once

#include "cantorlab/core.hpp"
#include "cantorlab/expansion.hpp"

#include <cstdint>
#include <utility>

namespace cantor {

/// Largest block order n for which 2^n-length blocks are materialized.
inline constexpr unsigned kMaxBlockOrder = 16;

/// τ_ℓ: parity of the binary digit sum of ℓ.
int thue_morse(std::uint64_t l);

/// λ_ℓ(m) for ℓ ≥ 1 from the Thue–Morse closed form.
Digit lambda_digit(int m, std::uint64_t l);

/// λ_1 … λ_L over Ω_m.
Word lambda(int m, std::size_t length);

/// λ_1 … λ_L over Ω_{2N−1} from the doubling recursion
/// λ_1 = N, λ_{2^{n+1}} = 2N−1−λ_{2^n}, λ_{2^n+ℓ} = 2N−2−λ_ℓ.
Word lambda_recursive(int n, std::size_t length);

/// λ(m) as an infinite reference stream.
class LambdaReference final : public DigitReference {
 public:
  explicit LambdaReference(int m) : m_(m) {}
  int alphabet_size() const override { return m_; }
  Digit digit(std::size_t i) const override { return lambda_digit(m_, i + 1); }

 private:
  int m_;
};

/// w_n = λ_1 … λ_{2^n} over Ω_{2N−1}.
Word w_block(int n_digits, unsigned n);

/// C_n^∞ = λ_1 … λ_{2^n} (λ_{2^n+1} … λ_{2^{n+1}})^∞.
EpSequence c_sequence(int n_digits, unsigned n);

/// ξ_n = (N−1)λ_1 … λ_{2^n−1} and η_n = (N−2)λ_1 … λ_{2^n−1}.
std::pair<Word, Word> xi_eta(int n_digits, unsigned n);

/// v_n = N (N−1)^{n−1}.
Word v_block(int n_digits, unsigned n);

}  // namespace cantor
