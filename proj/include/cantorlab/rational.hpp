#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cantor {

using Int = mpz_class;
using Rat = mpq_class;

/// num/den in lowest terms. mpq_class's two-argument constructor does not reduce.
inline Rat frac(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses an exact rational from `p/q`, an integer, or a decimal literal
/// with optional exponent (`0.39`, `1e-6`, `-2.5E3`). Throws
/// std::invalid_argument with the offending position on malformed input.
Rat parse_rat(std::string_view text);

Rat pow(const Rat& base, unsigned long exponent);

Rat floor_dyadic(const Rat& x, unsigned long bits);
Rat ceil_dyadic(const Rat& x, unsigned long bits);

enum class Rounding { Nearest, Down, Up };

/// Fixed-point decimal rendering with exactly `digits` fractional digits.
std::string to_decimal(const Rat& x, int digits, Rounding mode = Rounding::Nearest);

inline std::string to_fraction(const Rat& x) { return x.get_str(); }

/// Number of bits needed so that 2^-bits <= tol.
unsigned long bits_for_tolerance(const Rat& tol);

/// Closed rational interval [lo, hi]. Arithmetic is exact; `coarsen` widens
/// outward onto a dyadic grid so long evaluations keep bounded operand size.
class RatInterval {
 public:
  RatInterval() = default;
  explicit RatInterval(const Rat& point) : lo_(point), hi_(point) {}
  RatInterval(Rat lo, Rat hi);

  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  Rat width() const { return hi_ - lo_; }
  Rat midpoint() const { return (lo_ + hi_) / 2; }

  bool contains(const Rat& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const RatInterval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool is_positive() const { return lo_ > 0; }
  bool is_negative() const { return hi_ < 0; }

  RatInterval coarsen(unsigned long bits) const;

  friend RatInterval operator+(const RatInterval& a, const RatInterval& b);
  friend RatInterval operator-(const RatInterval& a, const RatInterval& b);
  friend RatInterval operator*(const RatInterval& a, const RatInterval& b);
  friend RatInterval operator/(const RatInterval& a, const RatInterval& b);
  friend bool operator==(const RatInterval& a, const RatInterval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Rat lo_;
  Rat hi_;
};

/// Certified enclosures of transcendental functions at rational points,
/// evaluated with directed rounding at `bits` of working precision.
RatInterval log_enclosure(const Rat& x, unsigned long bits = 160);
RatInterval sqrt_enclosure(const Rat& x, unsigned long bits = 160);

}  // namespace cantor
