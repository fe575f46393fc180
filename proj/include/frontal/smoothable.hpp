#pragma once

#include "frontal/frame.hpp"

namespace frontal {

struct SmoothabilityReport {
    bool smoothable = false;
    int side = 0;  // +1 when (0,eps) works, -1 when (-eps,0) works
    double min_singular_value = 0.0;  // over the accepted side's samples
};

// Samples l over each signed side of 0 at 8 geometric scales and q over a
// grid neighborhood of p (half-width eps/2). A side is accepted when
// D(x+l n) keeps rank 2 (smallest singular value > 1e-8) at all samples
// and det(Lambda + l mu) keeps one sign; the sign condition is what a
// finite sample can certify about rank-2-ness between samples.
SmoothabilityReport parallelly_smoothable(const FrontalSurface& s, const Vec2& p, double eps,
                                          int grid_n = 9);

}  // namespace frontal
