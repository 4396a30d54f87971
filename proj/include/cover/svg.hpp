#pragma once

#include <optional>
#include <string>

#include "cover/instance.hpp"

namespace cover {

// Deterministic SVG: region boundary black on white, holes filled gray,
// solution pieces (if given) in semi-transparent fills from a fixed palette.
// Coordinates are scaled into a fixed 1000-unit viewport.
std::string render_svg(const Instance& inst, const std::optional<Solution>& sol);

}  // namespace cover
