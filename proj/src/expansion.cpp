#include "cantorlab/expansion.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace cantor {

std::string to_string(Verdict v) {
  switch (v.kind) {
    case Verdict::Kind::Yes:
      return "yes";
    case Verdict::Kind::No:
      return "no";
    case Verdict::Kind::Undetermined:
      return "undetermined";
  }
  return "undetermined";
}

namespace {

void check_base(const Rat& beta, int m) {
  if (m < 2) throw std::invalid_argument("digit set Omega_m needs m >= 2");
  if (!(beta * m > 1 && beta < 1)) {
    throw std::invalid_argument("base " + beta.get_str() + " outside (1/" + std::to_string(m) +
                                ", 1)");
  }
}

Digit ceil_minus_one(const Rat& u) {
  Int c;
  mpz_cdiv_q(c.get_mpz_t(), u.get_num_mpz_t(), u.get_den_mpz_t());
  c -= 1;
  return static_cast<Digit>(c.get_si());
}

// One quasi-greedy step from remainder r; returns the digit and updates r.
Digit quasi_greedy_step(Rat& r, const Rat& beta, int m) {
  Rat u = r / beta;
  Digit d = std::min<Digit>(m - 1, ceil_minus_one(u));
  r = u - d;
  return d;
}

}  // namespace

Word quasi_greedy(const Rat& x, const Rat& beta, int m, std::size_t length) {
  check_base(beta, m);
  Rat x_max = Rat(m - 1) * beta / (1 - beta);
  if (!(x > 0 && x <= x_max)) {
    throw std::invalid_argument("quasi_greedy: target " + x.get_str() + " outside (0, " +
                                x_max.get_str() + "]");
  }
  Word out(Alphabet::unsigned_digits(m));
  Rat r = x;
  for (std::size_t i = 0; i < length; ++i) out.push_back(quasi_greedy_step(r, beta, m));
  return out;
}

QuasiGreedyStream::QuasiGreedyStream(Rat x, Rat beta, int m)
    : x_(std::move(x)), beta_(std::move(beta)), m_(m) {
  // validates the arguments
  quasi_greedy(x_, beta_, m_, 0);
  states_.push_back(x_);
}

void QuasiGreedyStream::extend_to(std::size_t n) const {
  while (digits_.size() < n) {
    Rat r = states_.back();
    digits_.push_back(quasi_greedy_step(r, beta_, m_));
    states_.push_back(std::move(r));
  }
}

Digit QuasiGreedyStream::digit(std::size_t i) const {
  std::lock_guard lock(mutex_);
  extend_to(i + 1);
  return digits_[i];
}

std::optional<Rat> QuasiGreedyStream::state(std::size_t i) const {
  std::lock_guard lock(mutex_);
  extend_to(i);
  return states_[i];
}

Word QuasiGreedyStream::prefix(std::size_t length) const {
  std::lock_guard lock(mutex_);
  extend_to(length);
  return Word(Alphabet::unsigned_digits(m_),
              std::vector<Digit>(digits_.begin(),
                                 digits_.begin() + static_cast<std::ptrdiff_t>(length)));
}

std::shared_ptr<const QuasiGreedyStream> delta_stream(const Rat& beta, int m) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, int>, std::shared_ptr<const QuasiGreedyStream>> cache;
  auto key = std::make_pair(beta.get_str(), m);
  std::lock_guard lock(mutex);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  if (cache.size() >= 512) cache.clear();
  auto stream = std::make_shared<const QuasiGreedyStream>(Rat(1), beta, m);
  cache.emplace(std::move(key), stream);
  return stream;
}

Word delta_of_beta(const Rat& beta, int m, std::size_t length) {
  return delta_stream(beta, m)->prefix(length);
}

bool is_quasi_greedy_valid(const EpSequence& gamma, const Rat& beta) {
  const Alphabet& a = gamma.alphabet();
  if (a.kind() != Alphabet::Kind::Unsigned) {
    throw std::invalid_argument("is_quasi_greedy_valid expects a sequence over Omega_m");
  }
  check_base(beta, a.parameter());
  bool infinite = false;
  for (Digit d : gamma.period()) infinite = infinite || d != 0;
  if (!infinite) {
    throw std::invalid_argument("is_quasi_greedy_valid: " + format_code(gamma) +
                                " is a finite expansion");
  }
  if (beta_series_eval(gamma, beta) != 1) {
    throw std::invalid_argument("is_quasi_greedy_valid: " + format_code(gamma) +
                                " is not a beta-expansion of 1 at beta = " + beta.get_str());
  }
  for (std::size_t k = 1; k <= gamma.orbit_size(); ++k) {
    if (lex_compare(shift(gamma, k), gamma) > 0) return false;
  }
  return true;
}

RefComparison compare_with_reference(const EpSequence& x, const DigitReference& ref,
                                     std::size_t cap) {
  if (x.alphabet().kind() != Alphabet::Kind::Unsigned ||
      x.alphabet().parameter() != ref.alphabet_size()) {
    throw std::invalid_argument("compare_with_reference: alphabet mismatch");
  }
  const std::size_t p = x.preperiod().size();
  const std::size_t q = x.period().size();
  std::set<Rat> seen;
  for (std::size_t i = 0; i < cap; ++i) {
    if (i >= p && (i - p) % q == 0) {
      if (auto st = ref.state(i)) {
        if (!seen.insert(*st).second) return {RefOrder::Equal, i};
      }
    }
    Digit a = x.at(i);
    Digit b = ref.digit(i);
    if (a < b) return {RefOrder::Less, i + 1};
    if (a > b) return {RefOrder::Greater, i + 1};
  }
  return {RefOrder::Tied, cap};
}

Verdict unique_expansion_test(const EpSequence& eps, const DigitReference& delta,
                              std::size_t cap) {
  const int m = delta.alphabet_size();
  std::size_t depth = 0;
  bool tied = false;
  for (std::size_t k = 1; k <= eps.orbit_size(); ++k) {
    const Digit e = eps.at(k - 1);
    EpSequence tail = shift(eps, k);
    auto check = [&](const EpSequence& s) {
      RefComparison c = compare_with_reference(s, delta, cap);
      depth = std::max(depth, c.depth);
      if (c.order == RefOrder::Tied) tied = true;
      return c.order == RefOrder::Equal || c.order == RefOrder::Greater;
    };
    if (e < m - 1 && check(tail)) return Verdict::no(depth);
    if (e > 0 && check(reflect(tail))) return Verdict::no(depth);
  }
  return tied ? Verdict::undetermined(cap) : Verdict::yes(depth);
}

Verdict unique_expansion_test(const EpSequence& eps, const Rat& beta, std::size_t cap) {
  if (eps.alphabet().kind() != Alphabet::Kind::Unsigned) {
    throw std::invalid_argument("unique_expansion_test expects a sequence over Omega_m");
  }
  return unique_expansion_test(eps, *delta_stream(beta, eps.alphabet().parameter()), cap);
}

}  // namespace cantor
