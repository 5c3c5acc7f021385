#pragma once

#include "cantorlab/core.hpp"

#include <string>

namespace cantor::cli {

/// SVG with two rows per level: the components φ_J([0,1]) of Γ and the
/// components ψ_I([t,1+t]) of Γ+t. Components whose neighborhood has two
/// members get class "overlap". Every bar carries its exact endpoints in
/// data-lo / data-hi.
std::string render_figure(const Params& p, const Rat& t, std::size_t levels);

inline constexpr std::size_t kMaxFigureLevels = 8;

}  // namespace cantor::cli
