#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorlab/expansion.hpp"

#include <random>

using namespace cantor;

namespace {

const Alphabet om3 = Alphabet::unsigned_digits(3);

// Largest digit keeping the partial sum Σ s_ℓβ^ℓ strictly below x, recomputed
// from the full partial sum at every step.
Word greedy_by_partial_sums(const Rat& x, const Rat& beta, int m, std::size_t length) {
  Word out(Alphabet::unsigned_digits(m));
  Rat sum = 0, w = beta;
  for (std::size_t n = 0; n < length; ++n, w *= beta) {
    Digit best = 0;
    for (Digit d = 0; d < m; ++d)
      if (sum + d * w < x) best = d;
    out.push_back(best);
    sum += best * w;
  }
  return out;
}

Rat series(const Word& w, const Rat& beta) {
  Rat sum = 0, p = beta;
  for (Digit d : w) {
    sum += d * p;
    p *= beta;
  }
  return sum;
}

}  // namespace

TEST_CASE("quasi_greedy at x_max gives the top digit") {
  const Rat beta(2, 5);
  CHECK(quasi_greedy(2 * beta / (1 - beta), beta, 3, 20) == Word(om3, std::vector<Digit>(20, 2)));
}

TEST_CASE("quasi_greedy matches an independent partial-sum greedy") {
  CHECK(quasi_greedy(1, frac(2, 5), 3, 8) == greedy_by_partial_sums(1, frac(2, 5), 3, 8));
  CHECK(quasi_greedy(1, frac(2, 5), 3, 8) == Word(om3, {2, 1, 0, 1, 1, 1, 0, 0}));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    int m = 2 + static_cast<int>(rng() % 5);
    Rat beta(static_cast<long>(1000 / m + 1 + rng() % 300), 1000);
    if (beta >= 1) continue;
    Rat x(static_cast<long>(1 + rng() % 1000), 1000);
    if (x > (m - 1) * beta / (1 - beta)) continue;
    Word q = quasi_greedy(x, beta, m, 40);
    CHECK(q == greedy_by_partial_sums(x, beta, m, 40));
    Rat x_max = (m - 1) * beta / (1 - beta);
    CHECK(abs(series(q, beta) - x) <= x_max * pow(beta, 40));
  }
}

TEST_CASE("quasi_greedy rejects bad inputs") {
  CHECK_THROWS_AS(quasi_greedy(1, frac(1, 3), 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(quasi_greedy(0, frac(2, 5), 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(quasi_greedy(2, frac(2, 5), 3, 4), std::invalid_argument);
}

TEST_CASE("delta at 1/N is (N-1)^inf and exceeds it below 1/N") {
  for (int n = 2; n <= 5; ++n) {
    const int m = 2 * n - 1;
    Alphabet a = Alphabet::unsigned_digits(m);
    CHECK(delta_of_beta(frac(1, n), m, 32) == Word(a, std::vector<Digit>(32, n - 1)));
    Rat below = frac(1, n) - frac(1, 1000);
    CHECK(delta_of_beta(below, m, 32) > Word(a, std::vector<Digit>(32, n - 1)));
  }
}

TEST_CASE("delta has a nonzero digit in every 64-digit window") {
  for (Rat beta : {frac(39, 100), frac(2, 5), frac(7, 20), frac(49, 100)}) {
    Word d = delta_of_beta(beta, 3, 512);
    for (std::size_t i = 0; i + 64 <= d.size(); ++i) {
      bool nonzero = false;
      for (std::size_t j = i; j < i + 64; ++j) nonzero = nonzero || d[j] != 0;
      CHECK(nonzero);
    }
  }
}

TEST_CASE("delta stream prefix is stable across lengths") {
  auto s = delta_stream(frac(39, 100), 3);
  Word a = s->prefix(50), b = s->prefix(100);
  CHECK(b.slice(0, 50) == a);
  CHECK(delta_stream(frac(39, 100), 3).get() == s.get());
}

TEST_CASE("is_quasi_greedy_valid") {
  const Rat half(1, 2);
  CHECK(is_quasi_greedy_valid(parse_code("|1", om3), half));
  CHECK_FALSE(is_quasi_greedy_valid(parse_code("0|2", om3), half));
  CHECK_THROWS_AS(is_quasi_greedy_valid(parse_code("2|0", om3), half), std::invalid_argument);
  CHECK_THROWS_AS(is_quasi_greedy_valid(parse_code("|2", om3), half), std::invalid_argument);
}

TEST_CASE("comparison against a periodic reference proves equality") {
  // δ(1/2) over Ω_3 is (1)^∞ with a constant remainder
  auto ref = delta_stream(frac(1, 2), 3);
  CHECK(ref->prefix(6) == Word(om3, {1, 1, 1, 1, 1, 1}));
  RefComparison c = compare_with_reference(parse_code("|1", om3), *ref);
  CHECK(c.order == RefOrder::Equal);
  CHECK(compare_with_reference(parse_code("1,1|0", om3), *ref).order == RefOrder::Less);
  CHECK(compare_with_reference(parse_code("1|2", om3), *ref).order == RefOrder::Greater);
}

TEST_CASE("unique_expansion_test examples") {
  const Rat beta(2, 5);
  CHECK(unique_expansion_test(parse_code("|0", om3), beta).is_yes());
  CHECK(unique_expansion_test(parse_code("|2", om3), beta).is_yes());
  // β ∈ (β_c, 1/2): δ(β) > (1)^∞
  CHECK(unique_expansion_test(parse_code("2|1", om3), frac(45, 100)).is_yes());
  // (1)^∞ equals δ(1/2) itself: not unique
  CHECK(unique_expansion_test(parse_code("|1", om3), frac(1, 2)).is_no());
}

TEST_CASE("unique_expansion_test is reflection invariant") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    std::vector<Digit> pre(rng() % 4), per(1 + rng() % 4);
    for (Digit& d : pre) d = static_cast<Digit>(rng() % 3);
    for (Digit& d : per) d = static_cast<Digit>(rng() % 3);
    EpSequence e(Word(om3, pre), Word(om3, per));
    Verdict a = unique_expansion_test(e, frac(39, 100));
    Verdict b = unique_expansion_test(reflect(e), frac(39, 100));
    CHECK(a.kind == b.kind);
  }
}

TEST_CASE("verdict strings") {
  CHECK(to_string(Verdict::yes()) == "yes");
  CHECK(to_string(Verdict::no()) == "no");
  CHECK(to_string(Verdict::undetermined(5)) == "undetermined");
}
