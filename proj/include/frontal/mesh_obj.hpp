#pragma once

#include <string>

#include "frontal/surface.hpp"

namespace frontal {

struct ObjCounts {
    int vertices = 0;
    int faces = 0;
};

// Triangulated nu x nv grid mesh of the map's image; 1-based indices,
// two triangles per cell.
ObjCounts write_obj(const FrontalSurface& s, int nu, int nv, const std::string& path);

}  // namespace frontal
