#include "cantorlab/uniqueness.hpp"

#include "cantorlab/admissible.hpp"
#include "cantorlab/critical.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <stdexcept>

namespace cantor {

TranslationCode::TranslationCode(EpSequence code, Params params)
    : code_(std::move(code)), params_(std::move(params)) {
  const Alphabet& a = code_.alphabet();
  if (a.kind() != Alphabet::Kind::Signed || a.parameter() != params_.n()) {
    throw std::invalid_argument("translation code must be over Omega_+-" +
                                std::to_string(params_.n()) + ", got " + a.name());
  }
  value_ = pi_eval(code_, params_);
}

bool unique_exact(const TranslationCode& tc) {
  const EpSequence& code = tc.code();
  const int n = tc.params().n();
  const Rat& beta = tc.params().beta();
  const Rat theta = tc.params().tail_threshold();
  for (std::size_t k = 1; k <= code.orbit_size(); ++k) {
    const Digit tk = code.at(k - 1);
    Rat tail = beta_series_eval(shift(code, k), beta);
    if (tk < n - 1 && !(tail < theta)) return false;
    if (tk > 1 - n && !(tail > -theta)) return false;
  }
  return true;
}

Verdict unique_lex(const TranslationCode& tc, std::size_t cap) {
  return unique_expansion_test(to_shifted_code(tc.code()), tc.params().beta(), cap);
}

Verdict unique_lex_at_critical(const EpSequence& shifted, std::size_t cap) {
  const Alphabet& a = shifted.alphabet();
  if (a.kind() != Alphabet::Kind::Unsigned || a.parameter() % 2 == 0 || a.parameter() < 3) {
    throw std::invalid_argument("unique_lex_at_critical expects a sequence over Omega_{2N-1}");
  }
  return unique_expansion_test(shifted, LambdaReference(a.parameter()), cap);
}

namespace {

void check_translation(const Rat& t) {
  if (t < -1 || t > 1) throw std::invalid_argument("translation " + t.get_str() + " outside [-1, 1]");
}

bool in_unit_window(const Rat& x) { return x >= -1 && x <= 1; }

}  // namespace

CodeEnumeration enum_codes(const Rat& t, const Params& p, std::size_t depth, bool keep_tree,
                           std::size_t node_cap) {
  check_translation(t);
  const int n = p.n();
  const Rat& beta = p.beta();
  const Rat scale = p.digit_scale();
  CodeEnumeration out;
  out.counts.push_back(1);
  if (keep_tree) out.nodes.push_back({0, 0, 0});

  struct Item {
    Rat remainder;
    std::size_t node;
  };
  std::vector<Item> frontier{{t, 0}};
  for (std::size_t k = 1; k <= depth; ++k) {
    std::vector<Item> next;
    for (const Item& item : frontier) {
      for (Digit d = 1 - n; d <= n - 1; ++d) {
        Rat r = (item.remainder - d * scale) / beta;
        if (!in_unit_window(r)) continue;
        std::size_t node = 0;
        if (keep_tree) {
          node = out.nodes.size();
          out.nodes.push_back({item.node, d, k});
        }
        next.push_back({std::move(r), node});
      }
    }
    out.counts.push_back(next.size());
    frontier = std::move(next);
    if (frontier.size() > node_cap) {
      out.truncated = k < depth;
      break;
    }
  }
  while (out.consistent_depth + 1 < out.counts.size() && out.counts[out.consistent_depth + 1] == 1) {
    ++out.consistent_depth;
  }
  return out;
}

NeighborhoodProfile neighborhoods(const Rat& t, const Params& p, std::size_t depth,
                                  bool stop_at_overlap) {
  check_translation(t);
  const int n = p.n();
  const Rat& beta = p.beta();
  const Rat scale = p.digit_scale();
  NeighborhoodProfile out;
  std::map<std::vector<Rat>, Int> states{{{Rat(-t)}, Int(1)}};
  for (std::size_t k = 1; k <= depth; ++k) {
    std::map<std::vector<Rat>, Int> next;
    int max_size = 0;
    for (const auto& [offsets, mult] : states) {
      for (Digit d = 0; d < n; ++d) {
        std::vector<Rat> child;
        for (const Rat& x : offsets) {
          for (Digit e = 0; e < n; ++e) {
            Rat y = (x + (d - e) * scale) / beta;
            if (in_unit_window(y)) child.push_back(std::move(y));
          }
        }
        if (child.empty()) continue;
        std::sort(child.begin(), child.end());
        child.erase(std::unique(child.begin(), child.end()), child.end());
        max_size = std::max(max_size, static_cast<int>(child.size()));
        next[std::move(child)] += mult;
      }
    }
    Int total = 0;
    for (const auto& entry : next) total += entry.second;
    out.max_size.push_back(max_size);
    out.survivors.push_back(total);
    states = std::move(next);
    if (max_size > 1 && out.first_overlap == 0) {
      out.first_overlap = k;
      if (stop_at_overlap) break;
    }
  }
  return out;
}

RatInterval component(const Word& j, const Params& p) {
  Rat left = pi_eval(j, p);
  return RatInterval(left, left + pow(p.beta(), j.size()));
}

std::vector<std::vector<Word>> neighborhood_sets(const Rat& t, const Params& p, std::size_t level) {
  check_translation(t);
  const int n = p.n();
  const Alphabet a = p.cantor_alphabet();
  std::vector<Word> words{Word(a)};
  for (std::size_t k = 0; k < level; ++k) {
    std::vector<Word> longer;
    for (const Word& w : words) {
      for (Digit d = 0; d < n; ++d) {
        Word x = w;
        x.push_back(d);
        longer.push_back(std::move(x));
      }
    }
    words = std::move(longer);
  }
  std::vector<RatInterval> comps;
  for (const Word& w : words) comps.push_back(component(w, p));
  std::vector<std::vector<Word>> out(words.size());
  for (std::size_t j = 0; j < words.size(); ++j) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      // ψ_I([t,1+t]) = φ_I([0,1]) + t
      if (comps[i].lo() + t <= comps[j].hi() && comps[j].lo() <= comps[i].hi() + t) {
        out[j].push_back(words[i]);
      }
    }
  }
  return out;
}

DigitRange consecutive_digits(int n, Digit t) {
  if (t <= -n || t >= n) throw std::invalid_argument("digit outside Omega_+-N");
  return {std::max<Digit>(0, t), std::min<Digit>(n - 1, n - 1 + t)};
}

ConsecutiveProduct consecutive_products(const TranslationCode& tc) {
  if (!unique_exact(tc)) {
    throw std::invalid_argument("consecutive_products: code " + format_code(tc.code()) +
                                " is not the unique code of its value");
  }
  const int n = tc.params().n();
  ConsecutiveProduct out;
  for (Digit d : tc.code().preperiod()) out.pre.push_back(consecutive_digits(n, d));
  for (Digit d : tc.code().period()) out.per.push_back(consecutive_digits(n, d));
  return out;
}

Eigen::Matrix4i block_adjacency() {
  Eigen::Matrix4i a;
  a << 0, 1, 1, 0,
       0, 0, 1, 0,
       1, 0, 0, 1,
       1, 0, 0, 0;
  return a;
}

SubshiftSpec subshift_spec(int n_digits, unsigned n) {
  auto [xi, eta] = xi_eta(n_digits, n);
  Word xi_bar = xi.reflect(), eta_bar = eta.reflect();
  return {{std::move(xi), std::move(eta), std::move(xi_bar), std::move(eta_bar)}, block_adjacency()};
}

std::vector<Int> characteristic_polynomial(const Eigen::MatrixXi& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("characteristic_polynomial: non-square matrix");
  const std::size_t n = static_cast<std::size_t>(a.rows());
  using Mat = std::vector<std::vector<Int>>;
  auto multiply_a = [&](const Mat& m) {
    Mat out(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) != 0)
          for (std::size_t j = 0; j < n; ++j)
            out[i][j] += a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) * m[k][j];
    return out;
  };
  // Faddeev–LeVerrier: M_k = A M_{k−1} + c_{n−k+1} I, c_{n−k} = −tr(A M_k)/k
  std::vector<Int> c(n + 1, 0);
  c[n] = 1;
  Mat m(n, std::vector<Int>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    m = multiply_a(m);
    for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
    Mat am = multiply_a(m);
    Int trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am[i][i];
    c[n - k] = -trace / static_cast<long>(k);
  }
  return c;
}

namespace {

using Poly = std::vector<Rat>;  // low → high

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly remainder(Poly a, const Poly& b) {
  while (a.size() >= b.size()) {
    Rat f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Rat evaluate(const Poly& p, const Rat& x) {
  Rat acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

std::vector<Poly> sturm_chain(const std::vector<Int>& coeffs) {
  Poly p(coeffs.begin(), coeffs.end());
  trim(p);
  Poly dp;
  for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * static_cast<long>(i));
  std::vector<Poly> chain{p, dp};
  while (chain.back().size() > 1) {
    Poly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (Rat& x : r) x = -x;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_changes(const std::vector<Poly>& chain, const Rat& x) {
  int changes = 0, last = 0;
  for (const Poly& p : chain) {
    int s = sgn(evaluate(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

RatInterval spectral_radius(const Eigen::MatrixXi& a, unsigned long bits) {
  if ((a.array() < 0).any()) throw std::invalid_argument("spectral_radius: matrix has negative entries");
  std::vector<Int> c = characteristic_polynomial(a);
  Int bound = 0;
  for (const Int& x : c) bound = std::max(bound, Int(abs(x)));
  auto chain = sturm_chain(c);
  Rat lo = 0, hi = Rat(bound + 1);
  // the Perron root is the largest real root, and it is ≥ 0
  if (sign_changes(chain, lo) - sign_changes(chain, hi) == 0) return RatInterval(Rat(0));
  const Rat width(1, Int(1) << bits);
  while (hi - lo > width) {
    Rat mid = (lo + hi) / 2;
    if (sign_changes(chain, mid) - sign_changes(chain, hi) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return RatInterval(lo, hi);
}

RatInterval subshift_dim_bound(const Params& p, unsigned n) {
  const Rat& beta = p.beta();
  Rat tol(1, 1 << 20);
  for (int round = 0;; ++round) {
    RatInterval enc = beta_n(p.n(), n, tol).interval;
    if (beta < enc.lo()) break;
    if (beta >= enc.hi() || round > 64) {
      throw std::invalid_argument("subshift_dim_bound: beta = " + beta.get_str() +
                                  " is not below beta_" + std::to_string(n));
    }
    tol /= Rat(Int(1) << 32);
  }
  RatInterval rho = spectral_radius(block_adjacency(), 128);
  RatInterval log_rho(log_enclosure(rho.lo()).lo(), log_enclosure(rho.hi()).hi());
  RatInterval log_beta = log_enclosure(beta);
  Rat scale = Rat(Int(1) << n);
  RatInterval denom(-scale * log_beta.hi(), -scale * log_beta.lo());
  return log_rho / denom;
}

EpSequence subshift_sample(int n_digits, unsigned n, std::size_t blocks, std::uint64_t seed) {
  SubshiftSpec spec = subshift_spec(n_digits, n);
  const Eigen::Matrix4i& a = spec.adjacency;
  std::mt19937_64 rng(seed);
  auto successors = [&](int s) {
    std::vector<int> out;
    for (int j = 0; j < 4; ++j)
      if (a(s, j)) out.push_back(j);
    return out;
  };
  std::vector<int> walk{static_cast<int>(rng() % 4)};
  while (walk.size() < std::max<std::size_t>(blocks, 1)) {
    auto next = successors(walk.back());
    walk.push_back(next[rng() % next.size()]);
  }
  // shortest path of length ≥ 1 from the last state back to the first
  std::array<int, 4> parent;
  parent.fill(-1);
  std::deque<int> queue;
  for (int s : successors(walk.back())) {
    if (parent[static_cast<std::size_t>(s)] == -1) {
      parent[static_cast<std::size_t>(s)] = walk.back();
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    if (s == walk.front()) break;
    for (int u : successors(s)) {
      if (parent[static_cast<std::size_t>(u)] == -1) {
        parent[static_cast<std::size_t>(u)] = s;
        queue.push_back(u);
      }
    }
  }
  std::vector<int> back;
  for (int s = parent[static_cast<std::size_t>(walk.front())]; s != walk.back();
       s = parent[static_cast<std::size_t>(s)]) {
    back.push_back(s);
  }
  std::reverse(back.begin(), back.end());
  walk.insert(walk.end(), back.begin(), back.end());
  Word period(spec.blocks[0].alphabet());
  for (int s : walk) period = period + spec.blocks[static_cast<std::size_t>(s)];
  return EpSequence::periodic(std::move(period));
}

}  // namespace cantor
