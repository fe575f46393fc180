#include "frontal/extend.hpp"

#include <cmath>

#include "frontal/singular_set.hpp"

namespace frontal {

namespace {

constexpr int kRayCount = 8;
constexpr int kRayScales = 9;
constexpr double kCauchyTol = 1e-3;
constexpr double kBoundednessLimit = 1e6;

std::vector<Vec2> singular_samples(const FrontalSurface& s, int grid, std::size_t max_points) {
    const auto polylines = singular_set(s, grid, grid);
    std::vector<Vec2> points;
    auto push_unique = [&points](const Vec2& p) {
        for (const Vec2& q : points)
            if ((q - p).norm() < 1e-9) return;
        points.push_back(p);
    };
    for (const auto& line : polylines) {
        if (line.empty()) continue;
        const std::size_t stride = std::max<std::size_t>(1, line.size() / 3);
        for (std::size_t i = 0; i < line.size() && points.size() < max_points; i += stride)
            push_unique(line[i]);
        if (points.size() >= max_points) break;
    }
    return points;
}

}  // namespace

ExtendabilityReport extendability_test(const FrontalSurface& s, ExtendMode mode, int grid) {
    assert_proper_frontal(s);

    ExtendabilityReport report;
    report.mode = mode;

    if (mode == ExtendMode::Analytic) {
        if (!s.has_b_field())
            throw PreconditionFailed("analytic extendability requires a generator-supplied B field");
        double max_res = 0.0;
        for (int i = 0; i < grid; ++i) {
            const double u = s.domain.u0 + (s.domain.u1 - s.domain.u0) * i / (grid - 1);
            for (int k = 0; k < grid; ++k) {
                const double v = s.domain.v0 + (s.domain.v1 - s.domain.v0) * k / (grid - 1);
                const InvariantFrame f = invariant_frame(s, u, v);
                const Mat2 res = f.II_omega - s.b_field(u, v) * f.Lambda.transpose();
                max_res = std::max(max_res, res.cwiseAbs().maxCoeff());
            }
        }
        report.max_analytic_residual = max_res;
        report.extendable = max_res <= 1e-8;
        return report;
    }

    const std::vector<Vec2> targets = singular_samples(s, grid, 6);
    report.singular_points_tested = static_cast<int>(targets.size());
    if (targets.empty()) {
        report.extendable = true;  // no singular set: nothing to extend
        return report;
    }

    const double extent = std::min(s.domain.u1 - s.domain.u0, s.domain.v1 - s.domain.v0);
    const double r0 = 0.02 * extent;

    bool all_ok = true;
    for (const Vec2& q : targets) {
        for (int ray = 0; ray < kRayCount; ++ray) {
            const double angle = ray * (2.0 * M_PI / kRayCount);
            const Vec2 dir(std::cos(angle), std::sin(angle));

            std::vector<std::array<double, 4>> samples;
            for (int j = 0; j < kRayScales; ++j) {
                const Vec2 p = q + (r0 * std::pow(2.0, -j)) * dir;
                if (!s.domain.contains(p.x(), p.y())) continue;
                const InvariantFrame f = invariant_frame(s, p.x(), p.y());
                if (std::abs(f.lambda) <= 1e-13) continue;
                const Mat2 t = f.rel_shape() / f.lambda;
                samples.push_back({t(0, 0), t(0, 1), t(1, 0), t(1, 1)});
            }
            if (samples.size() < 5) continue;  // ray unusable (left domain or inside the set)

            for (int entry = 0; entry < 4; ++entry) {
                double max_abs = 0.0;
                for (const auto& t : samples)
                    max_abs = std::max(max_abs, std::abs(t[static_cast<std::size_t>(entry)]));
                const std::size_t n = samples.size();
                const double d1 = std::abs(samples[n - 1][static_cast<std::size_t>(entry)] -
                                           samples[n - 2][static_cast<std::size_t>(entry)]);
                const double d2 = std::abs(samples[n - 2][static_cast<std::size_t>(entry)] -
                                           samples[n - 3][static_cast<std::size_t>(entry)]);
                const bool bounded = max_abs <= kBoundednessLimit;
                const bool stable = d1 < kCauchyTol && d2 < kCauchyTol;
                if (bounded && stable) continue;

                all_ok = false;
                RayEvidence ev;
                ev.singular_point = q;
                ev.angle = angle;
                ev.row = entry / 2;
                ev.col = entry % 2;
                ev.stable = stable;
                ev.bounded = bounded;
                for (const auto& t : samples) ev.ratios.push_back(t[static_cast<std::size_t>(entry)]);
                report.evidence.push_back(std::move(ev));
            }
        }
    }
    report.extendable = all_ok;
    return report;
}

Mat2 mu_factor_estimate(const FrontalSurface& s, double u, double v) {
    const InvariantFrame f = invariant_frame(s, u, v);
    if (std::abs(f.lambda) > 1e-6) return adjugate(f.Lambda) * f.mu / f.lambda;

    const double extent = std::min(s.domain.u1 - s.domain.u0, s.domain.v1 - s.domain.v0);
    const double r0 = 0.02 * extent;

    Mat2 acc = Mat2::Zero();
    int used = 0;
    for (int ray = 0; ray < kRayCount; ++ray) {
        const double angle = ray * (2.0 * M_PI / kRayCount);
        const Vec2 dir(std::cos(angle), std::sin(angle));
        std::vector<Mat2> samples;
        for (int j = 0; j < kRayScales; ++j) {
            const Vec2 p = Vec2(u, v) + (r0 * std::pow(2.0, -j)) * dir;
            if (!s.domain.contains(p.x(), p.y())) continue;
            const InvariantFrame g = invariant_frame(s, p.x(), p.y());
            if (std::abs(g.lambda) <= 1e-13) continue;
            samples.push_back(Mat2(adjugate(g.Lambda) * g.mu / g.lambda));
        }
        if (samples.size() < 5) continue;
        const std::size_t n = samples.size();
        const double d1 = (samples[n - 1] - samples[n - 2]).cwiseAbs().maxCoeff();
        const double d2 = (samples[n - 2] - samples[n - 3]).cwiseAbs().maxCoeff();
        if (d1 >= kCauchyTol || d2 >= kCauchyTol)
            throw NotExtendable("ray limit of the curvature factor does not stabilize");
        acc += samples[n - 1];
        ++used;
    }
    if (used == 0) throw NotExtendable("no usable rays for the curvature factor estimate");
    return acc / used;
}

ExtendedCurvatures extended_curvatures(const FrontalSurface& s, double u, double v) {
    Mat2 b;
    if (s.has_b_field()) {
        const InvariantFrame f = invariant_frame(s, u, v);
        const Mat2 c = s.b_field(u, v);
        b = -c.transpose() * f.I_omega.inverse();
    } else {
        b = mu_factor_estimate(s, u, v);
    }
    ExtendedCurvatures result;
    result.K = b.determinant();
    result.H = -0.5 * b.trace();
    return result;
}

}  // namespace frontal
