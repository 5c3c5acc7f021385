#include "cli.hpp"

#include "figure.hpp"

#include "cantorlab/admissible.hpp"
#include "cantorlab/critical.hpp"
#include "cantorlab/expansion.hpp"
#include "cantorlab/selfsimilar.hpp"
#include "cantorlab/uniqueness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>

namespace cantor::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kValueDigits = 20;

struct Options {
  int n = 2;
  std::string beta;
  std::string code;
  std::string t = "0";
  std::string x = "1";
  std::string tol = "1e-6";
  std::string format = "table";
  std::string out_path;
  int n_from = 2;
  int n_to = 9;
  int m = 3;
  std::size_t count = 32;
  std::size_t depth = 40;
  std::size_t levels = 1;
  std::size_t depth_cap = kDefaultDepthCap;
  bool strict = false;
};

struct Usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::size_t depth_cap_from_env() {
  const char* raw = std::getenv("CANTORLAB_DEPTH_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultDepthCap;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw Usage(std::string("CANTORLAB_DEPTH_CAP: not a positive integer: ") + raw);
  return static_cast<std::size_t>(v);
}

Json rational_json(const Rat& x) {
  return Json{{"value", to_decimal(x, kValueDigits)}, {"exact", to_fraction(x)}};
}

std::string join_digits(const Word& w) { return to_string(w, " "); }

// ---- critical-points

std::string certified_rounding(const std::function<RatInterval(const Rat&)>& enclose, Rat tol,
                               int digits) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    if (auto r = common_rounding(enclose(tol), digits)) return *r;
    tol /= Rat(Int(1) << 20);
  }
  throw ToleranceError("cannot certify " + std::to_string(digits) + "-decimal rounding");
}

int cmd_critical_points(const Options& o, std::ostream& out) {
  const Rat tol = parse_rat(o.tol);
  if (tol <= 0) throw Usage("--tol must be positive");
  if (o.n_from < 2 || o.n_to < o.n_from) throw Usage("need 2 <= --n-from <= --n-to");
  const int digits =
      std::max(10, static_cast<int>(std::ceil(bits_for_tolerance(tol) * 0.30103)) + 3);

  if (o.format == "table") {
    const Rat coarse = std::min(tol, frac(1, 10'000'000));
    std::vector<std::string> head{"N"}, betas{"beta_c"}, alphas{"alpha_c"};
    for (int n = o.n_from; n <= o.n_to; ++n) {
      head.push_back(std::to_string(n));
      betas.push_back(certified_rounding([n](const Rat& e) { return beta_c(n, e).interval; },
                                         coarse, 5));
      alphas.push_back(certified_rounding([n](const Rat& e) { return alpha_c(n, e); }, coarse, 5));
    }
    for (const auto* row : {&head, &betas, &alphas}) {
      for (std::size_t i = 0; i < row->size(); ++i) {
        std::string cell = (*row)[i];
        cell.resize(std::max<std::size_t>(cell.size(), i == 0 ? 8 : 9), ' ');
        out << cell;
      }
      out << '\n';
    }
    return kOk;
  }
  if (o.format != "csv" && o.format != "json") throw Usage("--format must be table, csv or json");

  Json rows = Json::array();
  if (o.format == "csv") out << "N,beta_c_lo,beta_c_hi,alpha_c_lo,alpha_c_hi\n";
  for (int n = o.n_from; n <= o.n_to; ++n) {
    RatInterval b = beta_c(n, tol).interval;
    RatInterval a = alpha_c(n, tol);
    const std::string blo = to_decimal(b.lo(), digits, Rounding::Down);
    const std::string bhi = to_decimal(b.hi(), digits, Rounding::Up);
    const std::string alo = to_decimal(a.lo(), digits, Rounding::Down);
    const std::string ahi = to_decimal(a.hi(), digits, Rounding::Up);
    if (o.format == "csv") {
      out << n << ',' << blo << ',' << bhi << ',' << alo << ',' << ahi << '\n';
    } else {
      rows.push_back(Json{{"N", n},
                          {"beta_c", {{"lo", blo}, {"hi", bhi}}},
                          {"alpha_c", {{"lo", alo}, {"hi", ahi}}}});
    }
  }
  if (o.format == "json") out << rows.dump(2) << '\n';
  return kOk;
}

// ---- membership and codes

TranslationCode translation(const Options& o) {
  Params p(o.n, parse_rat(o.beta));
  return TranslationCode(parse_code(o.code, p.signed_alphabet()), p);
}

int cmd_unique(const Options& o, std::ostream& out) {
  TranslationCode tc = translation(o);
  const bool exact = unique_exact(tc);
  const Verdict lex = unique_lex(tc, o.depth_cap);
  const CodeEnumeration codes = enum_codes(tc.value(), tc.params(), o.depth, false, 256);
  Json j{{"t", to_decimal(tc.value(), kValueDigits)},
         {"t_exact", to_fraction(tc.value())},
         {"exact", exact},
         {"lex", to_string(lex)},
         {"enumDepthConsistent", codes.consistent_depth}};
  out << j.dump(2) << '\n';
  return o.strict && lex.is_undetermined() ? kUndetermined : kOk;
}

int cmd_codes(const Options& o, std::ostream& out) {
  Params p(o.n, parse_rat(o.beta));
  const Rat t = parse_rat(o.t);
  if (t < -1 || t > 1) throw Usage("--t must lie in [-1, 1]");
  CodeEnumeration e = enum_codes(t, p, o.depth, true);
  std::vector<std::vector<std::size_t>> children(e.nodes.size());
  for (std::size_t i = 0; i < e.nodes.size(); ++i) {
    if (e.nodes[i].parent != i) children[e.nodes[i].parent].push_back(i);
  }
  std::vector<std::size_t> stack;
  for (auto it = children[0].rbegin(); it != children[0].rend(); ++it) stack.push_back(*it);
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    out << std::string(2 * (e.nodes[i].depth - 1), ' ') << e.nodes[i].digit << '\n';
    for (auto it = children[i].rbegin(); it != children[i].rend(); ++it) stack.push_back(*it);
  }
  if (e.truncated) out << "# truncated after depth " << e.counts.size() - 1 << '\n';
  return kOk;
}

int cmd_selfsimilar(const Options& o, std::ostream& out) {
  TranslationCode tc = translation(o);
  Json j{{"t", to_decimal(tc.value(), kValueDigits)}, {"t_exact", to_fraction(tc.value())}};
  const bool unique = unique_exact(tc);
  j["unique"] = unique;
  std::optional<StrongPeriodicityWitness> w;
  if (unique) w = in_S(tc);
  j["member"] = w.has_value();
  if (!w) {
    j["witness"] = nullptr;
    j["ifs"] = nullptr;
    j["verification"] = nullptr;
  } else {
    j["witness"] = {{"q", w->q}, {"I", to_string(w->initial)}, {"J", to_string(w->repeated)}};
    IfsSpec spec = build_ifs(*w, tc.params());
    Json offsets = Json::array();
    for (const Rat& s : spec.offsets) offsets.push_back(rational_json(s));
    j["ifs"] = {{"ratio", rational_json(spec.ratio)}, {"offsets", offsets}};
    IfsVerification v = verify_ifs(spec, tc);
    j["verification"] = {{"verified", v.verified},
                         {"depth", v.depth},
                         {"witness", v.witness ? Json(to_fraction(*v.witness)) : Json(nullptr)}};
  }
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_dims(const Options& o, std::ostream& out) {
  DimensionReport d = dims(translation(o));
  auto render = [](const RatInterval& x) {
    return common_rounding(x, 12).value_or(to_decimal(x.midpoint(), 12));
  };
  out << Json{{"dimH", render(d.dim_h)}, {"dimP", render(d.dim_p)}}.dump(2) << '\n';
  return kOk;
}

// ---- sequences

int cmd_lambda(const Options& o, std::ostream& out) {
  if (o.m < 2) throw Usage("--m must be at least 2");
  out << join_digits(lambda(o.m, o.count)) << '\n';
  return kOk;
}

int cmd_expand(const Options& o, std::ostream& out) {
  out << join_digits(quasi_greedy(parse_rat(o.x), parse_rat(o.beta), o.m, o.count)) << '\n';
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  Classification c = classify(Params(o.n, parse_rat(o.beta)));
  out << "U: " << to_string(c.u.verdict) << "\nS: " << to_string(c.s.verdict) << '\n';
  return kOk;
}

// Words ε over Ω_{2N−1} of length k such that for every position i, the
// remaining window σ^i(ε) (when ε_i < 2N−2) and its reflection (when ε_i > 0)
// are ≤ the same-length prefix of δ(β).
Int count_window_admissible(const Params& p, std::size_t depth) {
  const int m = 2 * p.n() - 1;
  const Word delta = delta_of_beta(p.beta(), m, depth);
  struct Tie {
    std::size_t start;
    bool reflected;
  };
  Int total = 0;
  std::function<void(std::size_t, const std::vector<Tie>&)> walk =
      [&](std::size_t pos, const std::vector<Tie>& ties) {
        if (pos == depth) {
          ++total;
          return;
        }
        for (Digit d = 0; d < m; ++d) {
          std::vector<Tie> next;
          bool ok = true;
          for (const Tie& tie : ties) {
            const Digit e = tie.reflected ? m - 1 - d : d;
            const Digit ref = delta[pos - tie.start - 1];
            if (e > ref) {
              ok = false;
              break;
            }
            if (e == ref) next.push_back(tie);
          }
          if (!ok) continue;
          if (d < m - 1) next.push_back({pos, false});
          if (d > 0) next.push_back({pos, true});
          walk(pos + 1, next);
        }
      };
  walk(0, {});
  return total;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  Params p(o.n, parse_rat(o.beta));
  if (o.depth == 0 || o.depth > 24) throw Usage("--depth must be between 1 and 24");
  const Int count = count_window_admissible(p, o.depth);
  const double growth = std::log2(count.get_d()) / static_cast<double>(o.depth);
  out << Json{{"N", o.n},
              {"beta", to_fraction(p.beta())},
              {"depth", o.depth},
              {"count", count.get_str()},
              {"log2PerSymbol", growth}}
             .dump(2)
      << '\n';
  return kOk;
}

int cmd_figure(const Options& o, std::ostream& out) {
  Params p(o.n, parse_rat(o.beta));
  const std::string svg = render_figure(p, parse_rat(o.t), o.levels);
  if (o.out_path.empty()) {
    out << svg;
    return kOk;
  }
  namespace fs = std::filesystem;
  const fs::path target(o.out_path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    file << svg;
    if (!file.flush()) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  fs::rename(tmp, target);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact analysis of homogeneous Cantor sets and their translates", "cantorlab"};
  app.require_subcommand(1);
  std::function<int(const Options&, std::ostream&)> action;
  bool depth_cap_given = false;

  auto add = [&](const char* name, const char* help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto add_n_beta = [&o](CLI::App* sub) {
    sub->add_option("--N", o.n, "number of pieces N >= 2")->required();
    sub->add_option("--beta", o.beta, "contraction ratio p/q in (1/(2N-1), 1/N)")->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--strict", o.strict, "exit 4 on an undetermined verdict");
    sub->add_option("--depth-cap", o.depth_cap, "lexicographic depth cap")
        ->each([&depth_cap_given](const std::string&) { depth_cap_given = true; });
  };

  CLI::App* crit = add("critical-points", "beta_c and alpha_c for a range of N", cmd_critical_points);
  crit->add_option("--n-from", o.n_from, "first N");
  crit->add_option("--n-to", o.n_to, "last N");
  crit->add_option("--tol", o.tol, "enclosure width (table mode certifies 5 decimals)");
  crit->add_option("--format", o.format, "table, csv or json");

  CLI::App* uniq = add("unique", "is t = pi(code) uniquely coded?", cmd_unique);
  add_n_beta(uniq);
  uniq->add_option("--code", o.code, "code literal \"pre|per\" over the signed digits")->required();
  uniq->add_option("--depth", o.depth, "depth of the code enumeration");
  add_common(uniq);

  CLI::App* codes = add("codes", "prefix tree of the codes of t", cmd_codes);
  add_n_beta(codes);
  codes->add_option("--t", o.t, "translation p/q in [-1, 1]")->required();
  codes->add_option("--depth", o.depth, "tree depth");

  CLI::App* ss = add("selfsimilar", "self-similarity of the intersection", cmd_selfsimilar);
  add_n_beta(ss);
  ss->add_option("--code", o.code, "code literal \"pre|per\"")->required();

  CLI::App* dm = add("dims", "Hausdorff and packing dimension of the intersection", cmd_dims);
  add_n_beta(dm);
  dm->add_option("--code", o.code, "code literal \"pre|per\"")->required();

  CLI::App* lam = add("lambda", "digits of lambda(m)", cmd_lambda);
  lam->add_option("--m", o.m, "alphabet size")->required();
  lam->add_option("--count", o.count, "number of digits");

  CLI::App* ex = add("expand", "quasi-greedy expansion of x", cmd_expand);
  ex->add_option("--beta", o.beta, "base")->required();
  ex->add_option("--m", o.m, "alphabet size")->required();
  ex->add_option("--x", o.x, "value to expand");
  ex->add_option("--count", o.count, "number of digits");

  CLI::App* cls = add("classify", "regimes of U and S at beta", cmd_classify);
  add_n_beta(cls);

  CLI::App* en = add("enumerate", "count uniqueness-admissible words of a given length", cmd_enumerate);
  add_n_beta(en);
  en->add_option("--depth", o.depth, "word length (<= 24)")->required();

  CLI::App* fig = add("figure", "SVG of the components of Gamma and Gamma + t", cmd_figure);
  add_n_beta(fig);
  fig->add_option("--t", o.t, "translation p/q in [-1, 1]")->required();
  fig->add_option("--levels", o.levels, "number of levels");
  fig->add_option("--out", o.out_path, "output file (stdout if absent)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!depth_cap_given) o.depth_cap = depth_cap_from_env();
    return action(o, out);
  } catch (const ToleranceError& e) {
    err << "error: " << e.what() << '\n';
    return kTolerance;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace cantor::cli
