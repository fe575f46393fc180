#pragma once

#include <vector>

#include "frontal/frame.hpp"

namespace frontal {

enum class ExtendMode { Analytic, Numeric };

// One ray approaching a singular point; `ratios` holds the sampled values
// of one entry of II_omega adj(Lambda^T)/lambda, coarsest first.
struct RayEvidence {
    Vec2 singular_point;
    double angle = 0.0;
    int row = 0, col = 0;
    std::vector<double> ratios;
    bool stable = false;
    bool bounded = false;
};

struct ExtendabilityReport {
    bool extendable = false;
    ExtendMode mode = ExtendMode::Numeric;
    double max_analytic_residual = 0.0;   // analytic mode: max ||II_omega - B Lambda^T||
    int singular_points_tested = 0;
    std::vector<RayEvidence> evidence;    // numeric mode: failing entries (empty if extendable)
};

// Analytic mode verifies II_omega = B Lambda^T on a grid to 1e-8 and
// requires the surface's B field. Numeric mode samples the four entries
// of II_omega adj(Lambda^T)/lambda along 8 rays into each detected
// singular point at geometric distances; extendable iff every entry
// sequence is Cauchy-stable at the two finest scales and bounded.
ExtendabilityReport extendability_test(const FrontalSurface& s, ExtendMode mode, int grid = 33);

struct ExtendedCurvatures {
    double K = 0.0;
    double H = 0.0;
};

// Smooth extensions det(B) and -tr(B)/2 of the Gaussian and mean
// curvature, with mu = Lambda B. Uses the analytic B field when present,
// otherwise a ray-limit estimate; throws NotExtendable when the limit is
// unstable.
ExtendedCurvatures extended_curvatures(const FrontalSurface& s, double u, double v);

// B with mu = Lambda B at a regular point (exact) or by a stabilized ray
// limit at a singular point.
Mat2 mu_factor_estimate(const FrontalSurface& s, double u, double v);

}  // namespace frontal
