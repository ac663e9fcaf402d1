#pragma once

#include <string>

#include "sepcover/instance.hpp"
#include "sepcover/solution.hpp"

namespace sepcover {

struct RenderOptions {
  bool dual = false;          // draw the dual arcs/points instead of primal
  bool show_cutting = false;  // overlay cutting cells (implies dual geometry)
  int r = 0;                  // cutting parameter (0: solver default)
  int rho = 4;
  std::uint64_t seed = 1;
};

/// Static figure of an instance: the separating line, point markers
/// (<rect class="point">), disks (<circle class="disk">, chosen ones also
/// carry class "chosen").
std::string render_svg(const CoverageInstance& inst, const Solution* sol,
                       const RenderOptions& opts = {});

}  // namespace sepcover
