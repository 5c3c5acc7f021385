#include "cantorlab/critical.hpp"

#include "cantorlab/admissible.hpp"

#include <algorithm>
#include <functional>

namespace cantor {

QuadraticSurd::QuadraticSurd(Rat a, Rat b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ <= 0 || mpz_perfect_square_p(d_.get_mpz_t())) {
    throw std::invalid_argument("QuadraticSurd: radicand must be a positive non-square");
  }
  a_.canonicalize();
  b_.canonicalize();
}

namespace {

void same_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.d() != y.d()) throw std::invalid_argument("QuadraticSurd: radicands differ");
}

}  // namespace

int QuadraticSurd::compare(const Rat& r) const {
  // sign of x + b√d with x = a − r
  Rat x = a_ - r;
  int sx = sgn(x), sb = sgn(b_);
  if (sb == 0) return sx;
  if (sx == 0 || sx == sb) return sb;
  Rat lhs = x * x;
  Rat rhs = b_ * b_ * Rat(d_);
  int dominant = lhs > rhs ? sx : sb;  // lhs == rhs would make d a square
  return dominant;
}

RatInterval QuadraticSurd::enclosure(unsigned long bits) const {
  // √d ∈ [s, s+1]/2^k with s = ⌊√(d·4^k)⌋
  unsigned long k = bits + 2;
  Int b_num = abs(b_.get_num());
  k += mpz_sizeinbase(b_num.get_mpz_t(), 2);
  Int scaled = d_ << (2 * k);
  Int s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  Int scale = Int(1) << k;
  Rat root_lo(s, scale), root_hi(s + 1, scale);
  root_lo.canonicalize();
  root_hi.canonicalize();
  Rat p = a_ + b_ * root_lo, q = a_ + b_ * root_hi;
  return RatInterval(std::min(p, q), std::max(p, q));
}

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
  same_radicand(x, y);
  return QuadraticSurd(x.a_ + y.a_, x.b_ + y.b_, x.d_);
}

QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) {
  same_radicand(x, y);
  return QuadraticSurd(x.a_ - y.a_, x.b_ - y.b_, x.d_);
}

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
  same_radicand(x, y);
  return QuadraticSurd(x.a_ * y.a_ + x.b_ * y.b_ * Rat(x.d_), x.a_ * y.b_ + x.b_ * y.a_, x.d_);
}

QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y) {
  same_radicand(x, y);
  Rat norm = y.a_ * y.a_ - y.b_ * y.b_ * Rat(y.d_);
  if (norm == 0) throw std::domain_error("QuadraticSurd: division by zero");
  QuadraticSurd conj(y.a_ / norm, -y.b_ / norm, y.d_);
  return x * conj;
}

QuadraticSurd alpha_c_exact(int n) {
  if (n < 2) throw std::invalid_argument("alpha_c: N must be at least 2");
  return QuadraticSurd(frac(n + 1, 2), frac(-1, 2), Int((n - 1) * (n + 3)));
}

RatInterval alpha_c(int n, const Rat& tol) {
  return alpha_c_exact(n).enclosure(bits_for_tolerance(tol));
}

namespace {

constexpr long kBisectionCap = 1'000'000;
constexpr std::size_t kMaxTerms = std::size_t{1} << 18;

// Certified enclosure of f(β) = Σ s_ℓβ^ℓ − 1 that excludes 0 unless f(β) = 0.
using Evaluator = std::function<RatInterval(const Rat&)>;

Rat magnitude_bound(const RatInterval& x) { return std::max(abs(x.lo()), abs(x.hi())); }

RootEnclosure bisect(int n, Rat lo, Rat hi, const Rat& tol, const Evaluator& f,
                     std::string descriptor) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  RatInterval flo = f(lo), fhi = f(hi);
  if (!flo.is_negative() || !fhi.is_positive()) {
    throw std::logic_error("bisect: bracket for " + descriptor + " does not change sign");
  }
  long steps = 0;
  while (hi - lo > tol) {
    if (++steps > kBisectionCap) {
      throw ToleranceError("bisection cap reached for " + descriptor + " before tolerance " +
                           tol.get_str());
    }
    Rat mid = (lo + hi) / 2;
    RatInterval fm = f(mid);
    if (fm.lo() == 0 && fm.hi() == 0) {
      lo = hi = mid;
      flo = fhi = fm;
      break;
    }
    if (fm.is_negative()) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  RootEnclosure out;
  out.interval = RatInterval(lo, hi);
  out.residual = std::max(magnitude_bound(flo), magnitude_bound(fhi));
  out.descriptor = std::move(descriptor);
  out.in_domain = lo * (2 * n - 1) > 1 && hi * n < 1;
  return out;
}

Evaluator exact_evaluator(EpSequence seq) {
  return [seq = std::move(seq)](const Rat& beta) {
    return RatInterval(beta_series_eval(seq, beta) - 1);
  };
}

}  // namespace

RootEnclosure beta_c(int n, const Rat& tol) {
  if (n < 2) throw std::invalid_argument("beta_c: N must be at least 2");
  const int m = 2 * n - 1;
  // precision grows only when a sign cannot be certified; it persists across steps
  std::size_t terms = std::max<std::size_t>(64, bits_for_tolerance(tol) + 32);
  Evaluator f = [&terms, n, m](const Rat& beta) {
    const Rat tail_scale = Rat(2 * n - 2) / (1 - beta);
    while (true) {
      const unsigned long bits = terms + 16;
      Rat lo = 0, hi = 0;
      for (std::size_t l = terms; l >= 1; --l) {
        Digit d = lambda_digit(m, l);
        lo = floor_dyadic((lo + d) * beta, bits);
        hi = ceil_dyadic((hi + d) * beta, bits);
      }
      hi += ceil_dyadic(tail_scale * pow(beta, terms + 1), bits);
      RatInterval value(lo - 1, hi - 1);
      if (value.is_negative() || value.is_positive()) return value;
      terms *= 2;
      if (terms > kMaxTerms) {
        throw ToleranceError("beta_c: cannot certify sign at beta = " + beta.get_str());
      }
    }
  };
  return bisect(n, frac(1, m), frac(1, n), tol, f, "lambda");
}

RootEnclosure beta_n(int n_digits, unsigned n, const Rat& tol) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("beta_n: n must be odd and at least 3");
  if (n_digits < 2) throw std::invalid_argument("beta_n: N must be at least 2");
  return bisect(n_digits, frac(1, 2 * n_digits - 1), frac(1, n_digits), tol,
                exact_evaluator(c_sequence(n_digits, n)), "C_" + std::to_string(n));
}

RootEnclosure alpha_n(int n_digits, unsigned n, const Rat& tol) {
  if (n_digits < 2) throw std::invalid_argument("alpha_n: N must be at least 2");
  EpSequence seq = EpSequence::periodic(v_block(n_digits, n));
  std::string descriptor = "(N(N-1)^" + std::to_string(n - 1) + ")^inf";
  return bisect(n_digits, frac(1, 2 * n_digits), frac(1, n_digits), tol, exact_evaluator(seq),
                descriptor);
}

std::optional<std::string> common_rounding(const RatInterval& x, int digits) {
  std::string lo = to_decimal(x.lo(), digits), hi = to_decimal(x.hi(), digits);
  if (lo != hi) return std::nullopt;
  return lo;
}

std::string to_string(Dimensionality d) {
  switch (d) {
    case Dimensionality::PositiveDimension:
      return "positive-dimension";
    case Dimensionality::Critical:
      return "critical";
    case Dimensionality::Countable:
      return "countable";
  }
  return "countable";
}

Classification classify(const Params& p) {
  const Rat& beta = p.beta();
  Dimensionality s = alpha_c_exact(p.n()).compare(beta) > 0 ? Dimensionality::PositiveDimension
                                                            : Dimensionality::Countable;
  // β_c is transcendental, so a rational β is eventually separated from it
  Rat tol(1, 1 << 16);
  while (true) {
    RatInterval enc = beta_c(p.n(), tol).interval;
    if (beta < enc.lo()) return {{SetKind::U, Dimensionality::PositiveDimension}, {SetKind::S, s}};
    if (beta > enc.hi()) return {{SetKind::U, Dimensionality::Countable}, {SetKind::S, s}};
    tol /= Rat(Int(1) << 32);
  }
}

}  // namespace cantor
