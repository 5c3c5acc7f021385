#include "cantorlab/admissible.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

namespace cantor {

int thue_morse(std::uint64_t l) { return std::popcount(l) & 1; }

Digit lambda_digit(int m, std::uint64_t l) {
  if (m < 2) throw std::invalid_argument("lambda: m must be at least 2");
  if (l == 0) throw std::invalid_argument("lambda: index starts at 1");
  const int q = m / 2;
  if (m % 2 == 0) return q - 1 + thue_morse(l);
  return q + thue_morse(l) - thue_morse(l - 1);
}

Word lambda(int m, std::size_t length) {
  std::vector<Digit> out(length);
  for (std::size_t i = 0; i < length; ++i) out[i] = lambda_digit(m, i + 1);
  return Word(Alphabet::unsigned_digits(m), std::move(out));
}

Word lambda_recursive(int n, std::size_t length) {
  if (n < 2) throw std::invalid_argument("lambda_recursive: N must be at least 2");
  const Digit top = 2 * n - 2;
  std::vector<Digit> out;  // out[ℓ−1] = λ_ℓ
  out.reserve(length);
  if (length > 0) out.push_back(n);
  std::size_t block = 1;  // 2^k with λ_1 … λ_{2^k} known
  while (out.size() < length) {
    // λ_{2^k+ℓ} = 2N−2−λ_ℓ for 1 ≤ ℓ < 2^k
    for (std::size_t l = 1; l < block && out.size() < length; ++l) out.push_back(top - out[l - 1]);
    // λ_{2^{k+1}} = 2N−1−λ_{2^k}
    if (out.size() < length) out.push_back(top + 1 - out[block - 1]);
    block *= 2;
  }
  return Word(Alphabet::unsigned_digits(2 * n - 1), std::move(out));
}

namespace {

void check_order(unsigned n) {
  if (n > kMaxBlockOrder) {
    throw std::invalid_argument("block order " + std::to_string(n) + " exceeds cap " +
                                std::to_string(kMaxBlockOrder));
  }
}

// λ(2N−1) prefix of length 2^{n+1}, cached per N at the largest order requested.
Word lambda_prefix(int n_digits, unsigned n) {
  check_order(n);
  static std::mutex mutex;
  static std::map<int, Word> cache;
  const std::size_t need = std::size_t{2} << n;
  std::lock_guard lock(mutex);
  auto it = cache.find(n_digits);
  if (it == cache.end() || it->second.size() < need) {
    it = cache.insert_or_assign(n_digits, lambda(2 * n_digits - 1, need)).first;
  }
  return it->second.slice(0, need);
}

}  // namespace

Word w_block(int n_digits, unsigned n) {
  return lambda_prefix(n_digits, n).slice(0, std::size_t{1} << n);
}

EpSequence c_sequence(int n_digits, unsigned n) {
  Word l = lambda_prefix(n_digits, n);
  const std::size_t half = std::size_t{1} << n;
  return EpSequence(l.slice(0, half), l.slice(half, half));
}

std::pair<Word, Word> xi_eta(int n_digits, unsigned n) {
  if (n_digits < 2) throw std::invalid_argument("xi_eta: N must be at least 2");
  Word body = lambda_prefix(n_digits, n).slice(0, (std::size_t{1} << n) - 1);
  const Alphabet a = body.alphabet();
  return {Word(a, {n_digits - 1}) + body, Word(a, {n_digits - 2}) + body};
}

Word v_block(int n_digits, unsigned n) {
  if (n < 1) throw std::invalid_argument("v_block: n must be at least 1");
  check_order(n);
  std::vector<Digit> d(n, n_digits - 1);
  d[0] = n_digits;
  return Word(Alphabet::unsigned_digits(2 * n_digits - 1), std::move(d));
}

}  // namespace cantor
