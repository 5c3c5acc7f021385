#include "cantorlab/rational.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cantor {

namespace {

[[noreturn]] void parse_error(std::string_view text, std::size_t pos, const char* what) {
  throw std::invalid_argument("malformed rational '" + std::string(text) + "' at position " +
                              std::to_string(pos) + ": " + what);
}

// Reads [+-]?digits starting at pos; returns the digit string including sign.
std::string read_integer(std::string_view text, std::size_t& pos, bool allow_sign) {
  std::string out;
  if (allow_sign && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') out.push_back('-');
    ++pos;
  }
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    out.push_back(text[pos]);
    ++pos;
  }
  if (pos == start) parse_error(text, pos, "expected digit");
  return out;
}

Int pow10(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

Int pow2(unsigned long e) {
  Int r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
  return r;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  if (text.empty()) parse_error(text, 0, "empty literal");
  std::size_t pos = 0;
  std::string whole = read_integer(text, pos, true);

  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::string den = read_integer(text, pos, false);
    if (pos != text.size()) parse_error(text, pos, "trailing characters");
    Int d(den, 10);
    if (d == 0) parse_error(text, pos - den.size(), "zero denominator");
    Rat r(Int(whole, 10), d);
    r.canonicalize();
    return r;
  }

  bool negative = !whole.empty() && whole.front() == '-';
  std::string digits = negative ? whole.substr(1) : whole;
  unsigned long frac_len = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits.push_back(text[pos]);
      ++pos;
    }
    frac_len = pos - start;
  }
  long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    std::string e = read_integer(text, pos, true);
    if (e.size() > 6) parse_error(text, pos, "exponent out of range");
    exponent = std::stol(e);
  }
  if (pos != text.size()) parse_error(text, pos, "trailing characters");

  Rat r{Int(digits, 10)};
  long shift = exponent - static_cast<long>(frac_len);
  if (shift >= 0) {
    r *= Rat(pow10(static_cast<unsigned long>(shift)));
  } else {
    r /= Rat(pow10(static_cast<unsigned long>(-shift)));
  }
  r.canonicalize();
  return negative ? Rat(-r) : r;
}

Rat pow(const Rat& base, unsigned long exponent) {
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return Rat(num, den);  // already canonical: gcd(num^e, den^e) = 1
}

Rat floor_dyadic(const Rat& x, unsigned long bits) {
  Int scaled = x.get_num() * pow2(bits);
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
  Rat r(q, pow2(bits));
  r.canonicalize();
  return r;
}

Rat ceil_dyadic(const Rat& x, unsigned long bits) {
  Int scaled = x.get_num() * pow2(bits);
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
  Rat r(q, pow2(bits));
  r.canonicalize();
  return r;
}

std::string to_decimal(const Rat& x, int digits, Rounding mode) {
  if (digits < 0) throw std::invalid_argument("to_decimal: negative digit count");
  Int scale = pow10(static_cast<unsigned long>(digits));
  Int num = x.get_num() * scale;
  Int q;
  switch (mode) {
    case Rounding::Down:
      mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
      break;
    case Rounding::Up:
      mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
      break;
    case Rounding::Nearest: {
      // round half away from zero
      Int twice = 2 * abs(num) + x.get_den();
      Int den2 = 2 * x.get_den();
      mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
      if (num < 0) q = -q;
      break;
    }
  }
  bool negative = q < 0;
  std::string body = Int(abs(q)).get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + body : body;
}

unsigned long bits_for_tolerance(const Rat& tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  unsigned long bits = 0;
  Rat step(1);
  while (step > tol) {
    step /= 2;
    ++bits;
  }
  return bits;
}

RatInterval::RatInterval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::invalid_argument("RatInterval: lower bound exceeds upper bound");
}

RatInterval RatInterval::coarsen(unsigned long bits) const {
  return RatInterval(floor_dyadic(lo_, bits), ceil_dyadic(hi_, bits));
}

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
  return RatInterval(a.lo_ + b.lo_, a.hi_ + b.hi_);
}

RatInterval operator-(const RatInterval& a, const RatInterval& b) {
  return RatInterval(a.lo_ - b.hi_, a.hi_ - b.lo_);
}

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  Rat p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return RatInterval(*mn, *mx);
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
  if (b.contains(Rat(0))) throw std::domain_error("RatInterval: division by interval containing 0");
  return a * RatInterval(1 / b.hi_, 1 / b.lo_);
}

namespace {

struct MpfrValue {
  explicit MpfrValue(unsigned long bits) { mpfr_init2(v, static_cast<mpfr_prec_t>(bits)); }
  ~MpfrValue() { mpfr_clear(v); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  Rat to_rat() const {
    Rat r;
    mpfr_get_q(r.get_mpq_t(), v);
    return r;
  }
  mpfr_t v;
};

template <typename Fn>
RatInterval directed(const Rat& x, unsigned long bits, Fn fn) {
  MpfrValue arg_lo(bits + 64), arg_hi(bits + 64), lo(bits), hi(bits);
  // arguments are rounded outward first so the enclosure covers the exact x
  mpfr_set_q(arg_lo.v, x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(arg_hi.v, x.get_mpq_t(), MPFR_RNDU);
  fn(lo.v, arg_lo.v, MPFR_RNDD);
  fn(hi.v, arg_hi.v, MPFR_RNDU);
  return RatInterval(lo.to_rat(), hi.to_rat());
}

}  // namespace

RatInterval log_enclosure(const Rat& x, unsigned long bits) {
  if (x <= 0) throw std::domain_error("log_enclosure: non-positive argument");
  return directed(x, bits, mpfr_log);
}

RatInterval sqrt_enclosure(const Rat& x, unsigned long bits) {
  if (x < 0) throw std::domain_error("sqrt_enclosure: negative argument");
  return directed(x, bits, mpfr_sqrt);
}

}  // namespace cantor
