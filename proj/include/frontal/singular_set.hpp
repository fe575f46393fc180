#pragma once

#include <vector>

#include "frontal/frame.hpp"

namespace frontal {

// Zero-level extraction of det Lambda over an nu x nv node grid by
// marching squares, with per-edge bisection refinement to |lambda| <
// 1e-10. Empty result allowed. Requires nu, nv >= 16.
std::vector<std::vector<Vec2>> singular_set(const FrontalSurface& s, int nu, int nv);

// Rejects surfaces whose sampled singular set fills a whole grid cell
// (four corners and the center all singular).
void assert_proper_frontal(const FrontalSurface& s, int nu = 17, int nv = 17);

}  // namespace frontal
