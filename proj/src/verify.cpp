#include "frontal/verify.hpp"

#include <cmath>

#include "frontal/extend.hpp"
#include "frontal/frame.hpp"
#include "frontal/rng.hpp"

namespace frontal {

namespace {

std::vector<Vec2> regular_samples(const FrontalSurface& s, int want, Rng& rng) {
    std::vector<Vec2> points;
    for (int attempt = 0; attempt < 100 * want && static_cast<int>(points.size()) < want;
         ++attempt) {
        const double u = rng.uniform(s.domain.u0, s.domain.u1);
        const double v = rng.uniform(s.domain.v0, s.domain.v1);
        const InvariantFrame f = invariant_frame(s, u, v);
        if (std::abs(f.lambda) > 1e-3) points.emplace_back(u, v);
    }
    return points;
}

}  // namespace

std::vector<VerifyEntry> verify_surface(const FrontalSurface& s, int grid) {
    std::vector<VerifyEntry> out;
    auto push = [&out](const std::string& name, double residual, double tol) {
        out.push_back({name, residual, tol, residual <= tol});
    };

    const DecompositionResiduals d = decomposition_residuals(s, grid, grid);
    push("decomposition-dx", d.dx, 1e-9);
    push("decomposition-dn", d.dn, 1e-8);
    push("shape-symmetry", d.symmetry, 1e-9);

    Rng rng;
    const std::vector<Vec2> regular = regular_samples(s, 100, rng);

    double scaling_k = 0.0, scaling_h = 0.0, knc = 0.0;
    for (const Vec2& p : regular) {
        const InvariantFrame f = invariant_frame(s, p.x(), p.y());
        const auto classical = classical_curvatures(f);
        if (!classical) continue;
        scaling_k = std::max(scaling_k, std::abs(f.K_rel - f.lambda * classical->K) /
                                            (1.0 + std::abs(f.K_rel)));
        scaling_h = std::max(scaling_h, std::abs(f.H_rel - f.lambda * classical->H) /
                                            (1.0 + std::abs(f.H_rel)));

        const double angle = rng.uniform(0.0, 2.0 * M_PI);
        const Vec2 zeta(std::cos(angle), std::sin(angle));
        const double kp = zeta.dot(f.II * zeta) / zeta.dot(f.I * zeta);
        const Vec2 w = f.Lambda.transpose() * zeta;
        knc = std::max(knc, std::abs(relative_normal_curvature(f, w) - f.lambda * kp));
    }
    push("scaling-K", scaling_k, 1e-8);
    push("scaling-H", scaling_h, 1e-8);
    push("normal-curvature-scaling", knc, 1e-8);

    double eigen_res = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double u = rng.uniform(s.domain.u0, s.domain.u1);
        const double v = rng.uniform(s.domain.v0, s.domain.v1);
        const InvariantFrame f = invariant_frame(s, u, v);
        try {
            const PrincipalDirections p = principal_directions(f);
            const Mat2 shape = f.rel_shape();
            eigen_res = std::max(eigen_res, (shape * p.w1 - p.k1 * f.I_omega * p.w1).norm());
            eigen_res = std::max(eigen_res, (shape * p.w2 - p.k2 * f.I_omega * p.w2).norm());
        } catch (const UmbilicLike&) {
        } catch (const ComplexEigen&) {
        }
    }
    push("eigen-residual", eigen_res, 1e-9);

    {
        Mat2 basis;
        basis << 1.3, 0.4, -0.2, 0.9;  // det 1.25
        const FrontalSurface hat = with_basis_change(s, basis);
        const double det = basis.determinant();
        double res_k = 0.0, res_h = 0.0;
        for (std::size_t i = 0; i < regular.size() && i < 40; ++i) {
            const Vec2& p = regular[i];
            const InvariantFrame f = invariant_frame(s, p.x(), p.y());
            const InvariantFrame g = invariant_frame(hat, p.x(), p.y());
            res_k = std::max(res_k,
                             std::abs(g.K_rel - f.K_rel / det) / (1.0 + std::abs(f.K_rel)));
            res_h = std::max(res_h,
                             std::abs(g.H_rel - f.H_rel / det) / (1.0 + std::abs(f.H_rel)));
        }
        push("basis-change-K", res_k, 1e-8);
        push("basis-change-H", res_h, 1e-8);
    }

    if (s.kind == GeneratorKind::ExtendableNormal) {
        // D(u,b)^T D(g1,g2) symmetric (the reduced-basis compatibility).
        double res = 0.0;
        for (int i = 0; i < grid; ++i) {
            const double u = s.domain.u0 + (s.domain.u1 - s.domain.u0) * i / (grid - 1);
            for (int k = 0; k < grid; ++k) {
                const double v = s.domain.v0 + (s.domain.v1 - s.domain.v0) * k / (grid - 1);
                const SurfaceJets j = s.jets(u, v);
                const Jet2& b = j.x[1];
                const Jet2& g1 = j.omega[2][0];
                const Jet2& g2 = j.omega[2][1];
                res = std::max(res, std::abs(g1.fv + b.fu * g2.fv - b.fv * g2.fu));
            }
        }
        push("compatibility-symmetry", res, 1e-9);
    }

    if (s.has_b_field()) {
        const ExtendabilityReport rep = extendability_test(s, ExtendMode::Analytic, grid);
        push("analytic-extendability", rep.max_analytic_residual, 1e-8);
    }

    if (s.pde_residual) {
        double res = 0.0;
        for (int i = 0; i < 32; ++i) {
            const double u = s.domain.u0 + (s.domain.u1 - s.domain.u0) * i / 31.0;
            for (int k = 0; k < 32; ++k) {
                const double v = s.domain.v0 + (s.domain.v1 - s.domain.v0) * k / 31.0;
                res = std::max(res, s.pde_residual(u, v));
            }
        }
        push("pde-residual", res, 1e-10);
    }

    if (s.has_k_extension()) {
        double res = 0.0;
        for (const Vec2& p : regular) {
            const InvariantFrame f = invariant_frame(s, p.x(), p.y());
            if (std::abs(f.lambda) < 1e-2) continue;
            const auto classical = classical_curvatures(f);
            if (!classical) continue;
            res = std::max(res, std::abs(classical->K - s.k_extension(p.x(), p.y())));
        }
        push("k-extension-agreement", res, 1e-6);
    }

    return out;
}

}  // namespace frontal
