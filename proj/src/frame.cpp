#include "frontal/frame.hpp"

#include <cmath>

namespace frontal {

InvariantFrame invariant_frame(const FrontalSurface& s, double u, double v) {
    const SurfaceJets j = s.jets(u, v);
    const auto n = unit_normal_jets(j);

    InvariantFrame f;
    f.u = u;
    f.v = v;
    for (int i = 0; i < 3; ++i) {
        f.Dx(i, 0) = j.x[i].fu;
        f.Dx(i, 1) = j.x[i].fv;
        f.Omega(i, 0) = j.omega[i][0].f;
        f.Omega(i, 1) = j.omega[i][1].f;
        f.Dn(i, 0) = n[i].fu;
        f.Dn(i, 1) = n[i].fv;
        f.normal(i) = n[i].f;
    }

    f.I = f.Dx.transpose() * f.Dx;
    f.I_omega = f.Omega.transpose() * f.Omega;
    f.II = -f.Dx.transpose() * f.Dn;
    f.II_omega = -f.Omega.transpose() * f.Dn;

    const Mat2 iw_inv = f.I_omega.inverse();
    f.Lambda = f.Dx.transpose() * f.Omega * iw_inv;
    f.mu = -f.II_omega.transpose() * iw_inv;
    f.alpha = f.mu * adjugate(f.Lambda);

    f.lambda = f.Lambda.determinant();
    f.K_rel = f.mu.determinant();
    f.H_rel = -0.5 * f.alpha.trace();
    f.disc = f.H_rel * f.H_rel - f.lambda * f.K_rel;
    const double root = std::sqrt(std::max(f.disc, 0.0));
    f.k1 = f.H_rel - root;
    f.k2 = f.H_rel + root;

    if (!std::isfinite(f.lambda) || !std::isfinite(f.K_rel) || !std::isfinite(f.H_rel))
        throw NumericError("non-finite invariant frame");
    return f;
}

double relative_normal_curvature(const InvariantFrame& f, const Vec2& w) {
    if (w.norm() == 0.0) throw ZeroDirection("relative normal curvature of the zero direction");
    const double num = w.dot(f.rel_shape() * w);
    const double den = w.dot(f.I_omega * w);
    return num / den;
}

PrincipalDirections principal_directions(const InvariantFrame& f) {
    if (f.disc < -1e-12) throw ComplexEigen("negative discriminant for relative principal curvatures");
    const Mat2 shape = f.rel_shape();
    const Mat2 sym = 0.5 * (shape + shape.transpose());
    Eigen::GeneralizedSelfAdjointEigenSolver<Mat2> solver(sym, f.I_omega);
    if (solver.info() != Eigen::Success) throw NumericError("eigen solve failed");

    PrincipalDirections p;
    p.k1 = solver.eigenvalues()(0);
    p.k2 = solver.eigenvalues()(1);
    p.w1 = solver.eigenvectors().col(0);
    p.w2 = solver.eigenvectors().col(1);
    if (std::abs(p.k2 - p.k1) < 1e-10)
        throw UmbilicLike("relative principal curvatures coincide; directions undefined");
    return p;
}

std::optional<ClassicalCurvatures> classical_curvatures(const InvariantFrame& f) {
    const double det_i = f.I.determinant();
    if (!(det_i > 1e-20)) return std::nullopt;
    ClassicalCurvatures c;
    c.K = f.II.determinant() / det_i;
    const double E = f.I(0, 0), F = f.I(0, 1), G = f.I(1, 1);
    const double L = f.II(0, 0), N = f.II(1, 1);
    const double M = 0.5 * (f.II(0, 1) + f.II(1, 0));
    c.H = (E * N - 2.0 * F * M + G * L) / (2.0 * det_i);
    return c;
}

DecompositionResiduals decomposition_residuals(const FrontalSurface& s, int nu, int nv) {
    DecompositionResiduals r;
    for (int i = 0; i < nu; ++i) {
        const double u = s.domain.u0 + (s.domain.u1 - s.domain.u0) * i / (nu - 1);
        for (int k = 0; k < nv; ++k) {
            const double v = s.domain.v0 + (s.domain.v1 - s.domain.v0) * k / (nv - 1);
            const InvariantFrame f = invariant_frame(s, u, v);
            r.dx = std::max(r.dx,
                            (f.Dx - f.Omega * f.Lambda.transpose()).cwiseAbs().maxCoeff());
            r.dn = std::max(r.dn, (f.Dn - f.Omega * f.mu.transpose()).cwiseAbs().maxCoeff());
            const Mat2 shape = f.rel_shape();
            r.symmetry =
                std::max(r.symmetry, (shape - shape.transpose()).cwiseAbs().maxCoeff());
        }
    }
    return r;
}

}  // namespace frontal
