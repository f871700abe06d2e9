#pragma once

#include <string>
#include <utility>
#include <vector>

#include "setopt/kernel.hpp"

namespace setopt {

using NamedSets = std::vector<std::pair<std::string, UpperSet>>;

// SVG 1.1 drawing of planar sets clipped to a viewport derived from their vertices.
// Empty sets appear only in the legend.
std::string plot_svg(const Workspace& ws, const NamedSets& sets);

}  // namespace setopt
