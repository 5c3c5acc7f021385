#include "figure.hpp"

#include "cantorlab/uniqueness.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace cantor::cli {

namespace {

constexpr int kWidth = 1000;
constexpr int kMargin = 20;
constexpr int kRowHeight = 40;
constexpr int kBarHeight = 12;

std::vector<Word> all_words(int n, std::size_t length) {
  std::vector<Word> out{Word(Alphabet::unsigned_digits(n))};
  for (std::size_t l = 0; l < length; ++l) {
    std::vector<Word> next;
    next.reserve(out.size() * n);
    for (const Word& w : out) {
      for (Digit d = 0; d < n; ++d) {
        Word x = w;
        x.push_back(d);
        next.push_back(std::move(x));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::string render_figure(const Params& p, const Rat& t, std::size_t levels) {
  if (t < -1 || t > 1) throw std::invalid_argument("figure: t must lie in [-1, 1]");
  if (levels == 0 || levels > kMaxFigureLevels) {
    throw std::invalid_argument("figure: levels must be between 1 and " +
                                std::to_string(kMaxFigureLevels));
  }
  const Rat lo = t < 0 ? t : Rat(0);
  const Rat hi = t > 0 ? 1 + t : Rat(1);
  const Rat scale = Rat(kWidth - 2 * kMargin) / (hi - lo);
  auto px = [&](const Rat& x) { return to_decimal(kMargin + (x - lo) * scale, 3); };

  const std::size_t rows = 2 * levels;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kRowHeight * rows << "\" viewBox=\"0 0 " << kWidth << ' ' << kRowHeight * rows << "\">\n"
      << "<style>.gamma{fill:#444}.shifted{fill:#3a6ea5}.overlap{fill:#c0392b}"
         "text{font:11px sans-serif}</style>\n";

  for (std::size_t level = 1; level <= levels; ++level) {
    std::vector<Word> words = all_words(p.n(), level);
    std::vector<std::vector<Word>> hoods = neighborhood_sets(t, p, level);
    std::set<std::string> paired;
    for (const auto& hood : hoods) {
      if (hood.size() != 2) continue;
      for (const Word& w : hood) paired.insert(to_string(w));
    }
    for (int row = 0; row < 2; ++row) {
      const std::size_t index = 2 * (level - 1) + row;
      const int y = static_cast<int>(index) * kRowHeight + 14;
      svg << "<text x=\"2\" y=\"" << y - 3 << "\">" << (row == 0 ? "level " : "shifted level ")
          << level << "</text>\n";
      for (std::size_t j = 0; j < words.size(); ++j) {
        RatInterval c = component(words[j], p);
        Rat a = c.lo(), b = c.hi();
        bool overlap;
        if (row == 0) {
          overlap = hoods[j].size() == 2;
        } else {
          a += t;
          b += t;
          overlap = paired.count(to_string(words[j])) > 0;
        }
        svg << "<rect class=\"" << (overlap ? "overlap" : row == 0 ? "gamma" : "shifted")
            << "\" x=\"" << px(a) << "\" y=\"" << y << "\" width=\"" << to_decimal((b - a) * scale, 3)
            << "\" height=\"" << kBarHeight << "\" data-word=\"" << to_string(words[j], "")
            << "\" data-lo=\"" << to_fraction(a) << "\" data-hi=\"" << to_fraction(b) << "\"/>\n";
      }
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace cantor::cli
