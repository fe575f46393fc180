#pragma once

#include <string>
#include <vector>

#include "frontal/surface.hpp"

namespace frontal {

struct VerifyEntry {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Runs every identity suite applicable to the surface and reports the
// max residual of each against its pinned tolerance.
std::vector<VerifyEntry> verify_surface(const FrontalSurface& s, int grid = 33);

}  // namespace frontal
