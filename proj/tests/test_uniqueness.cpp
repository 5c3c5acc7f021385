#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorlab/admissible.hpp"
#include "cantorlab/uniqueness.hpp"

#include <Eigen/Eigenvalues>

#include <random>
#include <set>

using namespace cantor;

namespace {

TranslationCode code(int n, Rat beta, const char* text) {
  Params p(n, std::move(beta));
  return TranslationCode(parse_code(text, p.signed_alphabet()), p);
}

std::vector<std::string> names(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const Word& w : ws) out.push_back(to_string(w));
  return out;
}

}  // namespace

TEST_CASE("unique_exact examples") {
  for (int n = 2; n <= 4; ++n) {
    Rat beta = frac(1, 2 * n - 1) + frac(1, 50 * n);
    std::string top = std::to_string(n - 1);
    TranslationCode one = code(n, beta, ("|" + top).c_str());
    CHECK(one.value() == 1);
    CHECK(unique_exact(one));
    TranslationCode edge = code(n, beta, (top + "|0").c_str());
    CHECK(edge.value() == 1 - beta);
    CHECK(unique_exact(edge));
  }
  // tail (−1)^∞ = −β/(1−β) = −2/3 is below −(1−2β)/(1−β) = −1/3
  TranslationCode twice = code(2, frac(2, 5), "1|-1");
  CHECK_FALSE(unique_exact(twice));
  CodeEnumeration e = enum_codes(twice.value(), twice.params(), 12);
  CHECK(*std::max_element(e.counts.begin(), e.counts.end()) >= 2);
}

TEST_CASE("unique_exact is invariant under negation") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    int n = 2 + static_cast<int>(rng() % 3);
    Params p(n, frac(1, 2 * n - 1) + frac(static_cast<long>(1 + rng() % 99), 100) *
                                         (frac(1, n) - frac(1, 2 * n - 1)));
    Alphabet a = p.signed_alphabet();
    std::vector<Digit> pre(rng() % 3), per(1 + rng() % 3);
    for (Digit& d : pre) d = static_cast<Digit>(rng() % (2 * n - 1)) - (n - 1);
    for (Digit& d : per) d = static_cast<Digit>(rng() % (2 * n - 1)) - (n - 1);
    EpSequence c(Word(a, pre), Word(a, per));
    CHECK(unique_exact(TranslationCode(c, p)) == unique_exact(TranslationCode(reflect(c), p)));
  }
}

TEST_CASE("unique_lex on the zero code") {
  for (int n = 2; n <= 4; ++n) {
    TranslationCode z = code(n, frac(1, 2 * n - 1) + frac(1, 50 * n), "|0");
    CHECK(unique_lex(z).is_yes());
  }
}

TEST_CASE("enum_codes: forced digits for t = 1") {
  Params p(3, frac(28, 100));
  CodeEnumeration e = enum_codes(1, p, 20, true);
  for (std::size_t k = 0; k <= 20; ++k) CHECK(e.counts[k] == 1);
  CHECK(e.consistent_depth == 20);
  for (std::size_t i = 1; i < e.nodes.size(); ++i) CHECK(e.nodes[i].digit == 2);
  CHECK_THROWS(enum_codes(frac(3, 2), p, 3));
}

TEST_CASE("neighborhoods of level-one components for t = 19/100") {
  Params p(3, frac(28, 100));
  auto hoods = neighborhood_sets(frac(19, 100), p, 1);
  REQUIRE(hoods.size() == 3);
  CHECK(names(hoods[0]) == std::vector<std::string>{"0"});
  CHECK(names(hoods[1]) == std::vector<std::string>{"0", "1"});
  CHECK(names(hoods[2]) == std::vector<std::string>{"1", "2"});
  NeighborhoodProfile prof = neighborhoods(frac(19, 100), p, 1);
  CHECK(prof.max_size[0] == 2);
  CHECK(prof.first_overlap == 1);
}

TEST_CASE("neighborhood sizes for t = 1 stay at most one") {
  Params p(3, frac(28, 100));
  NeighborhoodProfile prof = neighborhoods(1, p, 8);
  for (int s : prof.max_size) CHECK(s <= 1);
  for (std::size_t k = 1; k <= 4; ++k) {
    for (const auto& hood : neighborhood_sets(1, p, k)) CHECK(hood.size() <= 1);
  }
}

TEST_CASE("state quotient matches explicit neighborhoods") {
  Params p(2, frac(39, 100));
  for (Rat t : {Rat(0), frac(1, 10), frac(-3, 7), frac(1, 2)}) {
    NeighborhoodProfile prof = neighborhoods(t, p, 6);
    for (std::size_t k = 1; k <= 6; ++k) {
      auto hoods = neighborhood_sets(t, p, k);
      int max_size = 0;
      Int nonempty = 0;
      for (const auto& h : hoods) {
        max_size = std::max(max_size, static_cast<int>(h.size()));
        if (!h.empty()) ++nonempty;
      }
      CHECK(prof.max_size[k - 1] == max_size);
      CHECK(prof.survivors[k - 1] == nonempty);
    }
  }
}

TEST_CASE("neighborhoods and enum_codes agree on random translations") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    int n = 2 + static_cast<int>(rng() % 2);
    Params p(n, frac(1, 2 * n - 1) + frac(static_cast<long>(1 + rng() % 99), 100) *
                                         (frac(1, n) - frac(1, 2 * n - 1)));
    Rat t(static_cast<long>(rng() % 2001) - 1000, 1000);
    NeighborhoodProfile prof = neighborhoods(t, p, 12);
    CodeEnumeration e = enum_codes(t, p, 12);
    bool single_hoods = *std::max_element(prof.max_size.begin(), prof.max_size.end()) <= 1;
    CHECK(single_hoods == (e.consistent_depth == 12));
  }
}

TEST_CASE("consecutive digit sets") {
  CHECK(consecutive_digits(3, 0) == DigitRange{0, 2});
  CHECK(consecutive_digits(3, 2) == DigitRange{2, 2});
  CHECK(consecutive_digits(3, -1) == DigitRange{0, 1});
  ConsecutiveProduct cp = consecutive_products(code(3, frac(21, 100), "1|0,-2"));
  CHECK(cp.at(0).size() == 2);
  CHECK(cp.at(1).size() == 3);
  CHECK(cp.at(2).size() == 1);
  CHECK(cp.at(4).size() == 1);
  CHECK_THROWS(consecutive_products(code(2, frac(2, 5), "1|-1")));
}

TEST_CASE("spectral radius of the block adjacency matrix") {
  Eigen::MatrixXi a = block_adjacency();
  std::vector<Int> cp = characteristic_polynomial(a);
  REQUIRE(cp.size() == 5);
  CHECK(cp[4] == 1);
  RatInterval rho = spectral_radius(a, 80);
  const double golden = (1 + std::sqrt(5.0)) / 2;
  CHECK(std::abs(rho.midpoint().get_d() - golden) < 1e-12);
  // independent floating-point eigen decomposition
  Eigen::EigenSolver<Eigen::MatrixXd> es(a.cast<double>());
  double best = 0;
  for (int i = 0; i < 4; ++i) best = std::max(best, std::abs(es.eigenvalues()[i]));
  CHECK(std::abs(best - rho.midpoint().get_d()) < 1e-9);
}

TEST_CASE("characteristic polynomial of small matrices") {
  Eigen::MatrixXi m(2, 2);
  m << 1, 2, 3, 4;
  std::vector<Int> cp = characteristic_polynomial(m);  // x² − 5x − 2
  CHECK(cp == std::vector<Int>{-2, -5, 1});
}

TEST_CASE("subshift samples are uniquely coded below beta_3") {
  const Rat beta(38, 100);
  SubshiftSpec spec = subshift_spec(2, 3);
  CHECK(spec.blocks[0].size() == 8);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EpSequence s = subshift_sample(2, 3, 20, seed);
    CHECK(s.period().size() % 8 == 0);
    Verdict v = unique_expansion_test(s, beta, 2048);
    CHECK(v.is_yes());
  }
  RatInterval bound = subshift_dim_bound(Params(2, beta), 3);
  CHECK(bound.is_positive());
  CHECK_THROWS_AS(subshift_dim_bound(Params(2, frac(399, 1000)), 3), std::invalid_argument);
}

TEST_CASE("subshift samples follow the adjacency matrix") {
  SubshiftSpec spec = subshift_spec(3, 3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EpSequence s = subshift_sample(3, 3, 12, seed);
    const std::size_t len = spec.blocks[0].size();
    const std::size_t count = s.period().size() / len;
    std::vector<int> states;
    for (std::size_t b = 0; b < count; ++b) {
      Word blk = s.period().slice(b * len, len);
      int idx = -1;
      for (int j = 0; j < 4; ++j)
        if (spec.blocks[static_cast<std::size_t>(j)] == blk) idx = j;
      REQUIRE(idx >= 0);
      states.push_back(idx);
    }
    for (std::size_t b = 0; b < count; ++b) {
      CHECK(spec.adjacency(states[b], states[(b + 1) % count]) == 1);
    }
  }
}
