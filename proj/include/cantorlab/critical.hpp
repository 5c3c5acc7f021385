#pragma once

#include "cantorlab/core.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace cantor {

/// Raised when a certified root isolation cannot reach the requested
/// tolerance within its iteration and precision caps.
class ToleranceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Certified isolating interval of a base β defined by 1 = Σ s_ℓ β^ℓ.
struct RootEnclosure {
  RatInterval interval;
  /// Upper bound on |Σ s_ℓ β^ℓ − 1| at the two interval endpoints.
  Rat residual;
  /// The defining digit sequence, e.g. "lambda", "C_3", "(N(N-1)^2)^inf".
  std::string descriptor;
  /// False when the interval is not certified inside (1/(2N−1), 1/N).
  bool in_domain = true;
};

/// a + b√d with rational a, b and a positive non-square integer d.
class QuadraticSurd {
 public:
  QuadraticSurd(Rat a, Rat b, Int d);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Int& d() const { return d_; }

  /// Sign of (this − r), exact.
  int compare(const Rat& r) const;
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  /// Enclosure of width at most 2^-bits.
  RatInterval enclosure(unsigned long bits) const;

  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y);
  QuadraticSurd rational(const Rat& r) const { return QuadraticSurd(r, 0, d_); }

 private:
  Rat a_;
  Rat b_;
  Int d_;
};

/// α_c = [N+1−√((N−1)(N+3))]/2, the smaller root of α² − (N+1)α + 1.
QuadraticSurd alpha_c_exact(int n);
RatInterval alpha_c(int n, const Rat& tol);

/// Root of 1 = Σ λ_ℓ β^ℓ with λ = λ(2N−1).
RootEnclosure beta_c(int n, const Rat& tol);

/// Root of 1 = Σ c_ℓ β^ℓ for c = C_n^∞ (n odd ≥ 3).
RootEnclosure beta_n(int n_digits, unsigned n, const Rat& tol);

/// Root of 1 = Σ c_ℓ β^ℓ for c = (N(N−1)^{n−1})^∞, n ≥ 1.
RootEnclosure alpha_n(int n_digits, unsigned n, const Rat& tol);

/// Decimal rendering shared by both endpoints at `digits` places (round
/// half away from zero), if they agree.
std::optional<std::string> common_rounding(const RatInterval& x, int digits);

enum class SetKind { U, S };
enum class Dimensionality { PositiveDimension, Critical, Countable };

struct Regime {
  SetKind set;
  Dimensionality verdict;
};

struct Classification {
  Regime u;
  Regime s;
};

std::string to_string(Dimensionality d);

/// Regime of 𝒰 (t with a unique code) and 𝒮 (t with self-similar
/// intersection) for rational β. U: positive dimension below β_c, countable
/// above. S: positive dimension below α_c, countable from α_c on.
Classification classify(const Params& p);

}  // namespace cantor
