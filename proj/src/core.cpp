#include "cantorlab/core.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cantor {

Alphabet Alphabet::unsigned_digits(int m) {
  if (m < 1) throw std::invalid_argument("alphabet Ω_m needs m >= 1");
  return Alphabet(Kind::Unsigned, m);
}

Alphabet Alphabet::signed_digits(int n) {
  if (n < 1) throw std::invalid_argument("alphabet Ω_±N needs N >= 1");
  return Alphabet(Kind::Signed, n);
}

std::string Alphabet::name() const {
  return (kind_ == Kind::Unsigned ? "Omega_" : "Omega_+-") + std::to_string(param_);
}

Word::Word(Alphabet alphabet, std::vector<Digit> digits)
    : alphabet_(alphabet), digits_(std::move(digits)) {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (!alphabet_.contains(digits_[i])) {
      throw std::invalid_argument("digit " + std::to_string(digits_[i]) + " at index " +
                                  std::to_string(i) + " outside " + alphabet_.name());
    }
  }
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  if (pos + len > digits_.size()) throw std::out_of_range("Word::slice out of range");
  return Word(alphabet_, std::vector<Digit>(digits_.begin() + static_cast<std::ptrdiff_t>(pos),
                                            digits_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word Word::repeat(std::size_t times) const {
  Word out(alphabet_);
  out.digits_.reserve(digits_.size() * times);
  for (std::size_t i = 0; i < times; ++i) {
    out.digits_.insert(out.digits_.end(), digits_.begin(), digits_.end());
  }
  return out;
}

Word Word::reflect() const {
  Word out(alphabet_);
  out.digits_.reserve(digits_.size());
  for (Digit d : digits_) out.digits_.push_back(alphabet_.reflect(d));
  return out;
}

void Word::push_back(Digit d) {
  if (!alphabet_.contains(d)) {
    throw std::invalid_argument("digit " + std::to_string(d) + " outside " + alphabet_.name());
  }
  digits_.push_back(d);
}

Word operator+(const Word& a, const Word& b) {
  if (!(a.alphabet_ == b.alphabet_)) throw std::invalid_argument("concatenation across alphabets");
  Word out = a;
  out.digits_.insert(out.digits_.end(), b.digits_.begin(), b.digits_.end());
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  return std::lexicographical_compare_three_way(a.digits_.begin(), a.digits_.end(),
                                                b.digits_.begin(), b.digits_.end());
}

std::string to_string(const Word& w, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(w[i]);
  }
  return out;
}

EpSequence::EpSequence(Word preperiod, Word period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) throw std::invalid_argument("EpSequence: period must be nonempty");
  if (!(pre_.alphabet() == per_.alphabet())) {
    throw std::invalid_argument("EpSequence: preperiod and period alphabets differ");
  }
  canonicalize();
}

EpSequence EpSequence::periodic(Word period) {
  Alphabet a = period.alphabet();
  return EpSequence(Word(a), std::move(period));
}

void EpSequence::canonicalize() {
  // primitive root of the period
  const std::size_t r = per_.size();
  for (std::size_t d = 1; d < r; ++d) {
    if (r % d) continue;
    bool periodic = true;
    for (std::size_t i = d; i < r && periodic; ++i) periodic = per_[i] == per_[i - d];
    if (periodic) {
      per_ = per_.slice(0, d);
      break;
    }
  }
  // absorb preperiod suffix into a rotated period
  std::size_t absorbed = 0;
  const std::size_t q = per_.size();
  while (absorbed < pre_.size() &&
         pre_[pre_.size() - 1 - absorbed] == per_[(q - 1 - absorbed % q) % q]) {
    ++absorbed;
  }
  if (absorbed) {
    std::size_t rot = absorbed % q;
    std::vector<Digit> rotated(q);
    for (std::size_t i = 0; i < q; ++i) rotated[i] = per_[(i + q - rot) % q];
    per_ = Word(per_.alphabet(), std::move(rotated));
    pre_ = pre_.slice(0, pre_.size() - absorbed);
  }
}

Digit EpSequence::at(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return per_[(i - pre_.size()) % per_.size()];
}

Word EpSequence::prefix(std::size_t length) const {
  std::vector<Digit> out(length);
  for (std::size_t i = 0; i < length; ++i) out[i] = at(i);
  return Word(alphabet(), std::move(out));
}

std::strong_ordering lex_compare(const EpSequence& a, const EpSequence& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw std::invalid_argument("lex_compare: alphabet mismatch (" + a.alphabet().name() + " vs " +
                                b.alphabet().name() + ")");
  }
  const std::size_t bound = a.preperiod().size() + b.preperiod().size() +
                            std::lcm(a.period().size(), b.period().size());
  for (std::size_t i = 0; i < bound; ++i) {
    if (auto c = a.at(i) <=> b.at(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

EpSequence reflect(const EpSequence& s) {
  return EpSequence(s.preperiod().reflect(), s.period().reflect());
}

EpSequence shift(const EpSequence& s, std::size_t k) {
  const Word& pre = s.preperiod();
  const Word& per = s.period();
  if (k <= pre.size()) return EpSequence(pre.slice(k, pre.size() - k), per);
  std::size_t rot = (k - pre.size()) % per.size();
  return EpSequence::periodic(per.slice(rot, per.size() - rot) + per.slice(0, rot));
}

Params::Params(int n, Rat beta) : n_(n), beta_(std::move(beta)) {
  if (n_ < 2) throw std::invalid_argument("Params: N must be at least 2");
  beta_.canonicalize();
  if (!(beta_ * (2 * n_ - 1) > 1 && beta_ * n_ < 1)) {
    throw std::invalid_argument("Params: beta = " + beta_.get_str() + " outside (1/" +
                                std::to_string(2 * n_ - 1) + ", 1/" + std::to_string(n_) + ")");
  }
}

namespace {

// Horner evaluation of Σ_{i<len} w_i x^i.
Rat poly_eval(const Word& w, const Rat& x) {
  Rat acc = 0;
  for (std::size_t i = w.size(); i-- > 0;) acc = acc * x + w[i];
  return acc;
}

}  // namespace

Rat weighted_sum(const EpSequence& s, const Rat& beta) {
  const Word& pre = s.preperiod();
  const Word& per = s.period();
  Rat head = poly_eval(pre, beta);
  Rat cycle = poly_eval(per, beta);
  Rat tail = cycle * pow(beta, pre.size()) / (1 - pow(beta, per.size()));
  return head + tail;
}

Rat pi_eval(const EpSequence& code, const Params& params) {
  return weighted_sum(code, params.beta()) * params.digit_scale();
}

Rat pi_eval(const Word& prefix, const Params& params) {
  return poly_eval(prefix, params.beta()) * params.digit_scale();
}

Rat beta_series_eval(const EpSequence& s, const Rat& beta) { return beta * weighted_sum(s, beta); }

EpSequence to_shifted_code(const EpSequence& code) {
  if (code.alphabet().kind() != Alphabet::Kind::Signed) {
    throw std::invalid_argument("to_shifted_code expects a code over Omega_+-N");
  }
  const int n = code.alphabet().parameter();
  return map_digits(code, Alphabet::unsigned_digits(2 * n - 1), [n](Digit d) { return d + n - 1; });
}

EpSequence to_signed_code(const EpSequence& code) {
  const Alphabet& a = code.alphabet();
  if (a.kind() != Alphabet::Kind::Unsigned || a.parameter() % 2 == 0) {
    throw std::invalid_argument("to_signed_code expects a code over Omega_{2N-1}");
  }
  const int n = (a.parameter() + 1) / 2;
  return map_digits(code, Alphabet::signed_digits(n), [n](Digit d) { return d - n + 1; });
}

namespace {

Word parse_digit_list(std::string_view text, std::size_t offset, std::string_view whole,
                      Alphabet alphabet) {
  std::vector<Digit> digits;
  if (text.empty()) return Word(alphabet);
  std::size_t pos = 0;
  while (true) {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digit_start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == digit_start || pos - digit_start > 9) {
      throw std::invalid_argument("malformed code '" + std::string(whole) + "' at position " +
                                  std::to_string(offset + pos) + ": expected digit");
    }
    Digit d = std::stoi(std::string(text.substr(start, pos - start)));
    if (!alphabet.contains(d)) {
      throw std::invalid_argument("malformed code '" + std::string(whole) + "' at position " +
                                  std::to_string(offset + start) + ": digit " + std::to_string(d) +
                                  " outside " + alphabet.name());
    }
    digits.push_back(d);
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw std::invalid_argument("malformed code '" + std::string(whole) + "' at position " +
                                  std::to_string(offset + pos) + ": expected ','");
    }
    ++pos;
  }
  return Word(alphabet, std::move(digits));
}

}  // namespace

EpSequence parse_code(std::string_view text, Alphabet alphabet) {
  std::string compact;
  for (char c : text) {
    if (c != ' ') compact.push_back(c);
  }
  std::string_view view = compact;
  auto bar = view.find('|');
  if (bar == std::string_view::npos || view.find('|', bar + 1) != std::string_view::npos) {
    throw std::invalid_argument("malformed code '" + std::string(text) +
                                "': expected exactly one '|' separating preperiod and period");
  }
  Word pre = parse_digit_list(view.substr(0, bar), 0, text, alphabet);
  Word per = parse_digit_list(view.substr(bar + 1), bar + 1, text, alphabet);
  if (per.empty()) {
    throw std::invalid_argument("malformed code '" + std::string(text) + "' at position " +
                                std::to_string(bar + 1) + ": period must be nonempty");
  }
  return EpSequence(std::move(pre), std::move(per));
}

std::string format_code(const EpSequence& s) {
  return to_string(s.preperiod()) + "|" + to_string(s.period());
}

}  // namespace cantor
