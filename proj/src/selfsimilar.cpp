#include "cantorlab/selfsimilar.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace cantor {

bool dominates_shift(const EpSequence& s, std::size_t q) {
  if (q == 0) throw std::invalid_argument("dominates_shift: q must be positive");
  // (s_ℓ, s_{ℓ+q}) is periodic in ℓ beyond the preperiod with the period length
  const std::size_t span = s.preperiod().size() + s.period().size();
  for (std::size_t l = 0; l < span; ++l) {
    if (s.at(l + q) < s.at(l)) return false;
  }
  return true;
}

std::optional<StrongPeriodicityWitness> strong_periodicity_witness(const EpSequence& s) {
  const std::size_t p = s.preperiod().size();
  const std::size_t r = s.period().size();
  std::optional<std::size_t> best;
  for (std::size_t q = 1; q <= p + 2 * r + 2; ++q) {
    if (!dominates_shift(s, q)) continue;
    std::size_t blocks = p == 0 ? 1 : (p + q - 1) / q;
    std::size_t len = blocks * q;
    if (!best || len < *best) best = len;
  }
  if (!best) return std::nullopt;
  const std::size_t q = *best;
  Word both = s.prefix(2 * q);
  return StrongPeriodicityWitness{q, both.slice(0, q), both.slice(q, q)};
}

EpSequence derived_sequence(const TranslationCode& tc) {
  const int n = tc.params().n();
  return map_digits(tc.code(), tc.params().cantor_alphabet(),
                    [n](Digit t) { return n - 1 - std::abs(t); });
}

std::optional<StrongPeriodicityWitness> in_S(const TranslationCode& tc) {
  if (!unique_exact(tc)) {
    throw std::invalid_argument("in_S: code " + format_code(tc.code()) +
                                " is not the unique code of its value");
  }
  return strong_periodicity_witness(derived_sequence(tc));
}

IfsSpec build_ifs(const StrongPeriodicityWitness& w, const Params& p) {
  const std::size_t q = w.q;
  if (w.initial.size() != q || w.repeated.size() != q) {
    throw std::invalid_argument("build_ifs: witness blocks must have length q");
  }
  std::vector<Digit> bound(2 * q);
  for (std::size_t l = 0; l < q; ++l) {
    bound[l] = w.initial[l];
    bound[q + l] = w.repeated[l] - w.initial[l];
    if (bound[q + l] < 0) throw std::invalid_argument("build_ifs: I is not dominated by J");
  }
  const Rat& beta = p.beta();
  const Rat scale = p.digit_scale() / pow(beta, q);
  // all sums Σ j_ℓ β^{ℓ−1} over j ≼ στ, deduplicated level by level
  std::vector<Rat> sums{Rat(0)};
  Rat weight = 1;
  for (std::size_t l = 0; l < 2 * q; ++l) {
    std::vector<Rat> next;
    next.reserve(sums.size() * static_cast<std::size_t>(bound[l] + 1));
    for (const Rat& x : sums)
      for (Digit j = 0; j <= bound[l]; ++j) next.push_back(x + j * weight);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    sums = std::move(next);
    weight *= beta;
  }
  IfsSpec spec{pow(beta, q), {}};
  spec.offsets.reserve(sums.size());
  for (const Rat& x : sums) spec.offsets.push_back(x * scale);
  return spec;
}

namespace {

std::vector<RatInterval> merge(std::vector<RatInterval> pieces) {
  std::sort(pieces.begin(), pieces.end(),
            [](const RatInterval& a, const RatInterval& b) { return a.lo() < b.lo(); });
  std::vector<RatInterval> out;
  for (RatInterval& x : pieces) {
    if (!out.empty() && x.lo() <= out.back().hi()) {
      if (x.hi() > out.back().hi()) out.back() = RatInterval(out.back().lo(), x.hi());
    } else {
      out.push_back(std::move(x));
    }
  }
  return out;
}

bool covers(const std::vector<RatInterval>& set, const Rat& x) {
  auto it = std::upper_bound(set.begin(), set.end(), x,
                             [](const Rat& v, const RatInterval& i) { return v < i.lo(); });
  return it != set.begin() && std::prev(it)->contains(x);
}

}  // namespace

std::vector<RatInterval> product_cover(const EpSequence& bounds, const Params& p, std::size_t k) {
  const Rat& beta = p.beta();
  const Rat scale = p.digit_scale();
  std::vector<Rat> lefts{Rat(0)};
  Rat weight = scale;
  for (std::size_t l = 0; l < k; ++l) {
    std::vector<Rat> next;
    for (const Rat& x : lefts)
      for (Digit j = 0; j <= bounds.at(l); ++j) next.push_back(x + j * weight);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    lefts = std::move(next);
    weight *= beta;
  }
  // hull of one level-k cylinder: [a_J, a_J + β^k π(σ^k c)]
  const Rat length = pow(beta, k) * pi_eval(shift(bounds, k), p);
  std::vector<RatInterval> pieces;
  pieces.reserve(lefts.size());
  for (const Rat& a : lefts) pieces.emplace_back(a, a + length);
  return merge(std::move(pieces));
}

IfsVerification verify_ifs(const IfsSpec& spec, const EpSequence& bounds, const Params& p,
                           std::size_t depth) {
  if (spec.offsets.empty()) throw std::invalid_argument("verify_ifs: empty IFS");
  std::size_t q = 0;
  Rat power = p.beta();
  for (std::size_t e = 1; e <= 64; ++e, power *= p.beta()) {
    if (power == spec.ratio) {
      q = e;
      break;
    }
  }
  if (q == 0) return {false, depth, std::nullopt};
  const std::size_t k = std::max(depth, 2 * q);
  std::vector<RatInterval> target = product_cover(bounds, p, k);
  std::vector<RatInterval> source = product_cover(bounds, p, k - q);
  std::vector<RatInterval> pieces;
  pieces.reserve(source.size() * spec.offsets.size());
  for (const Rat& s : spec.offsets)
    for (const RatInterval& x : source) pieces.emplace_back(spec.ratio * (x.lo() + s), spec.ratio * (x.hi() + s));
  std::vector<RatInterval> image = merge(std::move(pieces));
  if (image == target) return {true, k, std::nullopt};

  std::vector<Rat> candidates;
  for (const auto* set : {&target, &image}) {
    for (const RatInterval& x : *set) {
      candidates.push_back(x.lo());
      candidates.push_back(x.hi());
      candidates.push_back(x.midpoint());
    }
  }
  for (const Rat& x : candidates) {
    if (covers(target, x) != covers(image, x)) return {false, k, x};
  }
  return {false, k, std::nullopt};
}

IfsVerification verify_ifs(const IfsSpec& spec, const TranslationCode& tc, std::size_t depth) {
  return verify_ifs(spec, derived_sequence(tc), tc.params(), depth);
}

DimensionReport dims(const TranslationCode& tc) {
  if (!unique_exact(tc)) {
    throw std::invalid_argument("dims: code " + format_code(tc.code()) +
                                " is not the unique code of its value");
  }
  const int n = tc.params().n();
  const Word& per = tc.code().period();
  RatInterval total(Rat(0));
  for (Digit t : per) {
    const int size = n - std::abs(t);
    if (size > 1) total = total + log_enclosure(Rat(size));
  }
  RatInterval log_beta = log_enclosure(tc.params().beta());
  const Rat r(static_cast<long>(per.size()));
  RatInterval denom(-r * log_beta.hi(), -r * log_beta.lo());
  RatInterval value = total / denom;
  return {value, value};
}

Digit psi(int n, Digit e) { return n - 1 - std::abs(e - n + 1); }

namespace {

int half_alphabet(const Alphabet& a) {
  if (a.kind() != Alphabet::Kind::Unsigned || a.parameter() % 2 == 0 || a.parameter() < 3) {
    throw std::invalid_argument("expected a sequence over Omega_{2N-1}, got " + a.name());
  }
  return (a.parameter() + 1) / 2;
}

// Forbidden blocks starting before `starts`; a match must end inside w.
std::vector<BlockViolation> scan_forbidden(const Word& w, std::size_t starts) {
  const int n = half_alphabet(w.alphabet());
  std::vector<BlockViolation> out;
  auto try_match = [&](std::size_t i, Digit edge) {
    if (i + 1 >= w.size() || w[i + 1] != edge) return;
    std::size_t j = i + 2;
    while (j < w.size() && w[j] == n - 1) ++j;
    if (j < w.size() && w[j] == edge) out.push_back({i, w.slice(i, j - i + 1)});
  };
  for (std::size_t i = 0; i < std::min(starts, w.size()); ++i) {
    const Digit d = w[i];
    if (d == n - 2 || d == n - 1) try_match(i, n);      // τ N (N−1)^k N
    if (d == n || d == n - 1) try_match(i, n - 2);      // τ̄ (N−2) (N−1)^k (N−2)
  }
  return out;
}

}  // namespace

Word psi_map(const Word& w) {
  const int n = half_alphabet(w.alphabet());
  std::vector<Digit> out;
  out.reserve(w.size());
  for (Digit e : w) out.push_back(psi(n, e));
  return Word(Alphabet::unsigned_digits(n), std::move(out));
}

EpSequence psi_map(const EpSequence& s) {
  const int n = half_alphabet(s.alphabet());
  return map_digits(s, Alphabet::unsigned_digits(n), [n](Digit e) { return psi(n, e); });
}

std::vector<BlockViolation> forbidden_block_check(const Word& w) {
  return scan_forbidden(w, w.size());
}

std::vector<BlockViolation> forbidden_block_check(const EpSequence& s) {
  const std::size_t span = s.preperiod().size() + s.period().size();
  // a run of N−1 longer than span + 1 covers a whole period and never ends
  return scan_forbidden(s.prefix(2 * span + 4), span);
}

Verdict s_membership_shifted(const EpSequence& eps, const Params& p, std::size_t cap) {
  if (half_alphabet(eps.alphabet()) != p.n()) {
    throw std::invalid_argument("s_membership_shifted: alphabet does not match N");
  }
  Verdict unique = unique_expansion_test(eps, p.beta(), cap);
  if (!unique.is_yes()) return unique;
  return strong_periodicity_witness(psi_map(eps)) ? Verdict::yes(unique.depth)
                                                  : Verdict::no(unique.depth);
}

}  // namespace cantor
