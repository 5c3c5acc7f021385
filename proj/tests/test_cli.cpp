#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli.hpp"

#include "cantorlab/rational.hpp"
#include "cantorlab/uniqueness.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

using namespace cantor;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Bar {
  std::string cls;
  std::string word;
  Rat lo;
  Rat hi;
};

std::vector<Bar> bars(const std::string& svg) {
  std::vector<Bar> out;
  std::regex re(R"re(<rect class="(\w+)"[^>]*data-word="(\d*)" data-lo="([-0-9/]+)" data-hi="([-0-9/]+)")re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
    out.push_back({(*it)[1], (*it)[2], parse_rat((*it)[3].str()), parse_rat((*it)[4].str())});
  }
  return out;
}

}  // namespace

TEST_CASE("critical-points table reproduces the five-decimal values") {
  Result r = run({"critical-points", "--n-from", "2", "--n-to", "9"});
  REQUIRE(r.code == 0);
  for (const char* v : {"0.39433", "0.27130", "0.21004", "0.17221", "0.14625", "0.12722", "0.11265",
                        "0.10111", "0.38197", "0.26795", "0.20871", "0.17157", "0.14590", "0.12702",
                        "0.11252", "0.10102"}) {
    CHECK(r.out.find(v) != std::string::npos);
  }
}

TEST_CASE("critical-points json schema and ordering at tight tolerance") {
  Result r = run({"critical-points", "--n-from", "2", "--n-to", "9", "--tol", "1e-12", "--format", "json"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j.size() == 8);
  for (const Json& row : j) {
    const int n = row.at("N").get<int>();
    Rat blo = parse_rat(row.at("beta_c").at("lo").get<std::string>());
    Rat bhi = parse_rat(row.at("beta_c").at("hi").get<std::string>());
    Rat alo = parse_rat(row.at("alpha_c").at("lo").get<std::string>());
    Rat ahi = parse_rat(row.at("alpha_c").at("hi").get<std::string>());
    CHECK(bhi - blo <= frac(2, 1'000'000'000'000));
    CHECK(frac(1, 2 * n - 1) < alo);
    CHECK(ahi < blo);
    CHECK(bhi < frac(1, n));
    CHECK(Json::parse(row.dump()) == row);
  }
}

TEST_CASE("critical-points csv") {
  Result r = run({"critical-points", "--n-from", "3", "--n-to", "4", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "N,beta_c_lo,beta_c_hi,alpha_c_lo,alpha_c_hi");
  std::getline(lines, line);
  CHECK(line.rfind("3,0.2713", 0) == 0);
  CHECK(run({"critical-points", "--format", "xml"}).code == cli::kUsage);
}

TEST_CASE("unique reports all verdicts") {
  Result r = run({"unique", "--N", "2", "--beta", "39/100", "--code", "|1"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("t_exact") == "1");
  CHECK(j.at("exact") == true);
  CHECK(j.at("lex") == "yes");
  CHECK(j.at("enumDepthConsistent") == 40);

  Result no = run({"unique", "--N", "2", "--beta", "2/5", "--code", "1|-1"});
  Json k = Json::parse(no.out);
  CHECK(k.at("exact") == false);
  CHECK(k.at("lex") == "no");
}

TEST_CASE("strict mode and depth cap") {
  // the first tail ties δ in its first digit
  std::vector<std::string> args{"unique", "--N", "2", "--beta", "39/100", "--code", "0|1"};
  CHECK(run(args).code == 0);
  auto capped = args;
  capped.insert(capped.end(), {"--depth-cap", "1"});
  Result r = run(capped);
  CHECK(Json::parse(r.out).at("lex") == "undetermined");
  capped.push_back("--strict");
  CHECK(run(capped).code == cli::kUndetermined);

  setenv("CANTORLAB_DEPTH_CAP", "1", 1);
  auto strict = args;
  strict.push_back("--strict");
  CHECK(run(strict).code == cli::kUndetermined);
  setenv("CANTORLAB_DEPTH_CAP", "zero", 1);
  CHECK(run(args).code == cli::kUsage);
  unsetenv("CANTORLAB_DEPTH_CAP");
}

TEST_CASE("classify") {
  Result r = run({"classify", "--N", "2", "--beta", "39/100"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "U: positive-dimension\nS: countable\n");
}

TEST_CASE("lambda and expand print digits") {
  CHECK(run({"lambda", "--m", "3", "--count", "8"}).out == "2 1 0 2 0 1 2 1\n");
  CHECK(run({"expand", "--beta", "2/5", "--m", "3", "--count", "8"}).out == "2 1 0 1 1 1 0 0\n");
}

TEST_CASE("codes prints the prefix tree") {
  Result r = run({"codes", "--N", "2", "--beta", "39/100", "--t", "1", "--depth", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "1\n  1\n    1\n");
  Params p(2, frac(39, 100));
  Result branching = run({"codes", "--N", "2", "--beta", "2/5", "--t", "1/10", "--depth", "6"});
  std::size_t leaves = 0;
  std::istringstream lines(branching.out);
  for (std::string line; std::getline(lines, line);)
    if (line.find_first_not_of(' ') == 10) ++leaves;
  CHECK(leaves == enum_codes(frac(1, 10), Params(2, frac(2, 5)), 6).counts[6]);
}

TEST_CASE("selfsimilar json round-trips") {
  Result r = run({"selfsimilar", "--N", "3", "--beta", "28/100", "--code", "|0"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(Json::parse(j.dump()) == j);
  CHECK(j.at("member") == true);
  CHECK(j.at("witness").at("q") == 1);
  CHECK(j.at("ifs").at("offsets").size() == 3);
  CHECK(j.at("verification").at("verified") == true);

  Json none = Json::parse(run({"selfsimilar", "--N", "2", "--beta", "39/100", "--code", "0|1,-1"}).out);
  CHECK(none.at("member") == false);
  CHECK(none.at("witness").is_null());
}

TEST_CASE("dims prints twelve decimals") {
  Result r = run({"dims", "--N", "2", "--beta", "39/100", "--code", "|0"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  const std::string d = j.at("dimH");
  CHECK(d.size() == 14);
  CHECK(std::abs(std::stod(d) - std::log(2.0) / std::log(100.0 / 39)) < 1e-12);
  CHECK(j.at("dimP") == j.at("dimH"));
  CHECK(run({"dims", "--N", "2", "--beta", "2/5", "--code", "1|-1"}).code == cli::kUsage);
}

TEST_CASE("enumerate grows at a positive rate") {
  Result r = run({"enumerate", "--N", "2", "--beta", "38/100", "--depth", "10"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  const double count = std::stod(j.at("count").get<std::string>());
  // growth rate implied by the subshift lower bound, in bits per digit
  RatInterval bound = subshift_dim_bound(Params(2, frac(38, 100)), 3);
  const double h = bound.lo().get_d() * std::log2(100.0 / 38);
  CHECK(h > 0);
  CHECK(count > std::pow(2.0, 10 * h));
  CHECK(j.at("log2PerSymbol").get<double>() > 0);
}

TEST_CASE("figure: level-one overlap pattern for t = 19/100") {
  Result r = run({"figure", "--N", "3", "--beta", "28/100", "--t", "19/100", "--levels", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("height=\"80\"") != std::string::npos);
  auto b = bars(r.out);
  REQUIRE(b.size() == 6);
  CHECK(b[0].cls == "gamma");
  CHECK(b[1].cls == "overlap");
  CHECK(b[2].cls == "overlap");
  for (int i = 3; i < 6; ++i) CHECK(b[i].lo == b[i - 3].lo + frac(19, 100));
}

TEST_CASE("figure: t = 0 rows coincide and level 3 has 27 bars of width beta^3") {
  auto b0 = bars(run({"figure", "--N", "3", "--beta", "28/100", "--t", "0"}).out);
  REQUIRE(b0.size() == 6);
  for (int i = 0; i < 3; ++i) {
    CHECK(b0[i].lo == b0[i + 3].lo);
    CHECK(b0[i].hi == b0[i + 3].hi);
  }
  auto b3 = bars(run({"figure", "--N", "3", "--beta", "28/100", "--t", "19/100", "--levels", "3"}).out);
  REQUIRE(b3.size() == 2 * (3 + 9 + 27));
  std::size_t level3 = 0;
  for (const Bar& bar : b3) {
    if (bar.word.size() != 3) continue;
    ++level3;
    CHECK(bar.hi - bar.lo == pow(frac(28, 100), 3));
  }
  CHECK(level3 == 54);
}

TEST_CASE("figure writes the output file") {
  auto path = std::filesystem::temp_directory_path() / "cantorlab_test_figure.svg";
  std::filesystem::remove(path);
  Result r = run({"figure", "--N", "2", "--beta", "39/100", "--t", "1/2", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content.rfind("<svg", 0) == 0);
  std::filesystem::remove(path);
  CHECK(run({"figure", "--N", "2", "--beta", "39/100", "--t", "3/2"}).code == cli::kUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"bogus"}).code == cli::kUsage);
  CHECK(run({"unique", "--N", "2", "--beta", "39/100"}).code == cli::kUsage);
  Result bad = run({"unique", "--N", "2", "--beta", "39/1x0", "--code", "|0"});
  CHECK(bad.code == cli::kUsage);
  CHECK(bad.err.find("position 4") != std::string::npos);
  Result code = run({"unique", "--N", "2", "--beta", "39/100", "--code", "|0,5"});
  CHECK(code.code == cli::kUsage);
  CHECK(run({"classify", "--N", "2", "--beta", "1/2"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == 0);
}
