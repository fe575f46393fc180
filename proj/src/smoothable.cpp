#include "frontal/smoothable.hpp"

#include <cmath>

namespace frontal {

SmoothabilityReport parallelly_smoothable(const FrontalSurface& s, const Vec2& p, double eps,
                                          int grid_n) {
    if (!s.domain.contains(p.x(), p.y()))
        throw PreconditionFailed("smoothability point outside domain");
    {
        const InvariantFrame f = invariant_frame(s, p.x(), p.y());
        if (!f.is_singular())
            throw PreconditionFailed("parallel smoothability is asked at a regular point");
    }

    const double half = 0.5 * eps;
    std::vector<Vec2> grid;
    grid.reserve(static_cast<std::size_t>(grid_n) * grid_n);
    for (int i = 0; i < grid_n; ++i) {
        for (int k = 0; k < grid_n; ++k) {
            const double u = p.x() - half + 2.0 * half * i / (grid_n - 1);
            const double v = p.y() - half + 2.0 * half * k / (grid_n - 1);
            if (s.domain.contains(u, v)) grid.emplace_back(u, v);
        }
    }

    SmoothabilityReport report;
    for (const int side : {+1, -1}) {
        bool ok = true;
        double min_sigma = std::numeric_limits<double>::infinity();
        int lambda_sign = 0;
        for (int j = 1; j <= 8 && ok; ++j) {
            const double l = side * eps * std::pow(2.0, -j);
            const FrontalSurface par = parallel_surface(s, l);
            for (const Vec2& q : grid) {
                const InvariantFrame f = invariant_frame(par, q.x(), q.y());
                Eigen::JacobiSVD<Mat32> svd(f.Dx);
                const double sigma = svd.singularValues()(1);
                if (!(sigma > 1e-8)) {
                    ok = false;
                    break;
                }
                min_sigma = std::min(min_sigma, sigma);
                const int sign = f.lambda > 0.0 ? 1 : -1;
                if (lambda_sign == 0) lambda_sign = sign;
                if (sign != lambda_sign) {
                    ok = false;  // det crosses zero between samples: rank drops there
                    break;
                }
            }
        }
        if (ok) {
            report.smoothable = true;
            report.side = side;
            report.min_singular_value = min_sigma;
            return report;
        }
    }
    return report;
}

}  // namespace frontal
