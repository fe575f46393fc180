#pragma once

#include <optional>

#include "frontal/surface.hpp"

namespace frontal {

// Singularity detection threshold on |det Lambda| and on singular values
// of Dx; front classification threshold on |H_rel|, |K_rel|. Jets give
// near-exact derivatives, so these reflect rounding only.
inline constexpr double kSingularTol = 1e-10;
inline constexpr double kFrontTol = 1e-8;

// All pointwise matrices and scalars of the relative-curvature calculus
// at a parameter point.
struct InvariantFrame {
    double u = 0.0, v = 0.0;

    Mat32 Dx, Dn, Omega;
    Vec3 normal;

    Mat2 I, II;              // first/second fundamental forms, II = -Dx^T Dn
    Mat2 I_omega, II_omega;  // basis metric and -Omega^T Dn
    Mat2 Lambda;             // Dx^T Omega I_omega^{-1}, so Dx = Omega Lambda^T
    Mat2 mu;                 // -II_omega^T I_omega^{-1}, so Dn = Omega mu^T
    Mat2 alpha;              // mu adj(Lambda)

    double lambda = 0.0;  // det Lambda; zero set is the singular set
    double K_rel = 0.0;   // det mu
    double H_rel = 0.0;   // -tr(alpha)/2
    double disc = 0.0;    // H_rel^2 - lambda*K_rel
    double k1 = 0.0, k2 = 0.0;  // relative principal curvatures (disc >= 0)

    bool is_singular() const { return std::abs(lambda) <= kSingularTol; }

    // II_omega adj(Lambda^T): symmetric, carries the relative normal
    // curvature's numerator.
    Mat2 rel_shape() const { return II_omega * adjugate(Lambda).transpose(); }
};

InvariantFrame invariant_frame(const FrontalSurface& s, double u, double v);

// (w^T S w)/(w^T I_omega w) with S = II_omega adj(Lambda^T); degree-0
// homogeneous in w.
double relative_normal_curvature(const InvariantFrame& f, const Vec2& w);

struct PrincipalDirections {
    Vec2 w1, w2;      // I_omega-normalized eigenvectors
    double k1, k2;    // k1 <= k2
};

// Generalized eigenproblem S w = k I_omega w. Throws UmbilicLike when the
// relative principal curvatures coincide, ComplexEigen when disc < -1e-12.
PrincipalDirections principal_directions(const InvariantFrame& f);

struct ClassicalCurvatures {
    double K = 0.0;
    double H = 0.0;
};

// det II/det I and mean curvature from I, II; only defined at regular
// points (det I bounded away from zero).
std::optional<ClassicalCurvatures> classical_curvatures(const InvariantFrame& f);

// max over an n x m grid of the entrywise decomposition residuals
// ||Dx - Omega Lambda^T|| and ||Dn - Omega mu^T||.
struct DecompositionResiduals {
    double dx = 0.0;
    double dn = 0.0;
    double symmetry = 0.0;  // || S - S^T ||
};
DecompositionResiduals decomposition_residuals(const FrontalSurface& s, int nu, int nv);

}  // namespace frontal
