#include "frontal/curves.hpp"

#include <cmath>

namespace frontal {

namespace {

constexpr double kBranchTol = 1e-6;
constexpr double kDiscTol = 1e-10;

Rect chart_around(const Rect& domain, const Vec2& center, double halfwidth) {
    Rect c;
    c.u0 = std::max(domain.u0, center.x() - halfwidth);
    c.u1 = std::min(domain.u1, center.x() + halfwidth);
    c.v0 = std::max(domain.v0, center.y() - halfwidth);
    c.v1 = std::min(domain.v1, center.y() + halfwidth);
    if (!(c.u0 < c.u1) || !(c.v0 < c.v1))
        throw PreconditionFailed("chart center outside the domain");
    return c;
}

template <typename F>
void for_chart_samples(const Rect& chart, int n, F&& fn) {
    for (int i = 0; i < n; ++i) {
        const double u = chart.u0 + (chart.u1 - chart.u0) * i / (n - 1);
        for (int k = 0; k < n; ++k) {
            const double v = chart.v0 + (chart.v1 - chart.v0) * k / (n - 1);
            fn(u, v);
        }
    }
}

Mat2 mu_factor_from_b(const Mat2& c, const Mat2& i_omega) {
    return -c.transpose() * i_omega.inverse();
}

}  // namespace

const char* field_kind_name(FieldKind k) {
    switch (k) {
        case FieldKind::Asymptotic1: return "asymptotic-1";
        case FieldKind::Asymptotic2: return "asymptotic-2";
        case FieldKind::CurvatureLine1: return "curvature-line-1";
        case FieldKind::CurvatureLine2: return "curvature-line-2";
    }
    return "unknown";
}

const char* termination_name(Termination t) {
    switch (t) {
        case Termination::StepsExhausted: return "steps-exhausted";
        case Termination::LeftDomain: return "left-domain";
        case Termination::FieldDegenerate: return "field-degenerate";
    }
    return "unknown";
}

FieldPair asymptotic_fields(const FrontalSurface& s, const Vec2& center, double halfwidth) {
    if (!s.has_b_field())
        throw NotExtendable("asymptotic fields need a surface with extendable normal curvature");

    Rect chart = chart_around(s.domain, center, halfwidth);

    // Extended Gaussian curvature det(B)/det(I_Omega) must be negative.
    for_chart_samples(chart, 9, [&](double u, double v) {
        const InvariantFrame f = invariant_frame(s, u, v);
        const Mat2 c = s.b_field(u, v);
        const double khat = c.determinant() / f.I_omega.determinant();
        if (khat >= -1e-10)
            throw NonNegativeCurvature("extended Gaussian curvature is not negative on the chart");
    });

    // Factorization branch, uniform over the (possibly shrunk) chart:
    // case 1 keeps |c12| away from zero, case 2 keeps |c11| away.
    int branch = 0;
    double c12_sign = 1.0;
    double hw = halfwidth;
    for (int attempt = 0; attempt <= 6; ++attempt, hw *= 0.5) {
        chart = chart_around(s.domain, center, hw);
        double min_c12 = std::numeric_limits<double>::infinity();
        double min_c11 = std::numeric_limits<double>::infinity();
        for_chart_samples(chart, 9, [&](double u, double v) {
            const Mat2 c = s.b_field(u, v);
            min_c12 = std::min(min_c12, std::abs(c(0, 1)));
            min_c11 = std::min(min_c11, std::abs(c(0, 0)));
        });
        if (min_c12 > kBranchTol) {
            branch = 1;
            c12_sign = s.b_field(center.x(), center.y())(0, 1) > 0.0 ? 1.0 : -1.0;
            break;
        }
        if (min_c11 > kBranchTol) {
            branch = 2;
            break;
        }
    }
    if (branch == 0)
        throw NumericError("no uniform factorization branch after shrinking the chart");

    auto inner = [s, branch, c12_sign](double u, double v, bool second) {
        const Mat2 c = s.b_field(u, v);
        const double disc = c(0, 1) * c(0, 1) - c(0, 0) * c(1, 1);
        const double root = std::sqrt(std::max(disc, 0.0));
        Vec2 w;
        if (branch == 1) {
            // Null directions written to stay nonzero while c11 or c22
            // pass through zero; parallel to the two linear factors.
            if (!second)
                w = Vec2(-c(0, 1) - c12_sign * root, c(0, 0));
            else
                w = Vec2(c(1, 1), -c(0, 1) - c12_sign * root);
        } else {
            if (!second)
                w = Vec2(-c(0, 1) + root, c(0, 0));
            else
                w = Vec2(-c(0, 1) - root, c(0, 0));
        }
        return w;
    };

    auto make_dir = [s, inner](bool second) {
        return [s, inner, second](double u, double v) {
            const InvariantFrame f = invariant_frame(s, u, v);
            return Vec2(adjugate(f.Lambda).transpose() * inner(u, v, second));
        };
    };

    FieldPair pair;
    pair.chart = chart;
    const std::string tag = branch == 1 ? "case1" : "case2";
    pair.first = DirectionField{FieldKind::Asymptotic1, make_dir(false), nullptr, tag, chart};
    pair.second = DirectionField{FieldKind::Asymptotic2, make_dir(true), nullptr, tag, chart};
    return pair;
}

FieldPair asymptotic_fields_front_k(const FrontalSurface& s) {
    if (s.kind != GeneratorKind::ExtendableKWave || !(s.wave_speed < 0.0))
        throw WrongGeneratorKind("coordinate asymptotic fields need a wave-mode surface");
    const double root = std::sqrt(-s.wave_speed);

    FieldPair pair;
    pair.chart = s.domain;
    pair.first = DirectionField{FieldKind::Asymptotic1,
                                [root](double, double) { return Vec2(-1.0, root); }, nullptr,
                                "wave", s.domain};
    pair.second = DirectionField{FieldKind::Asymptotic2,
                                 [root](double, double) { return Vec2(1.0, root); }, nullptr,
                                 "wave", s.domain};
    return pair;
}

FieldPair curvature_line_fields(const FrontalSurface& s, const Vec2& center, double halfwidth) {
    if (!s.has_b_field())
        throw NotExtendable("curvature-line fields need a surface with extendable normal curvature");

    const Rect chart = chart_around(s.domain, center, halfwidth);
    for_chart_samples(chart, 9, [&](double u, double v) {
        const InvariantFrame f = invariant_frame(s, u, v);
        const Mat2 b = mu_factor_from_b(s.b_field(u, v), f.I_omega);
        const double half_tr = 0.5 * b.trace();
        const double disc = half_tr * half_tr - b.determinant();
        if (disc <= kDiscTol)
            throw UmbilicChart("extended principal curvatures collide on the chart");
    });

    auto rho = [s](double u, double v, double sign) {
        const InvariantFrame f = invariant_frame(s, u, v);
        const Mat2 b = mu_factor_from_b(s.b_field(u, v), f.I_omega);
        const double half_tr = 0.5 * b.trace();
        const double disc = half_tr * half_tr - b.determinant();
        return half_tr + sign * std::sqrt(std::max(disc, 0.0));
    };

    auto make_dir = [s, rho](double sign) {
        return [s, rho, sign](double u, double v) {
            const InvariantFrame f = invariant_frame(s, u, v);
            const Mat2 bt = mu_factor_from_b(s.b_field(u, v), f.I_omega).transpose();
            const Mat2 a = bt - rho(u, v, sign) * Mat2::Identity();
            // Kernel direction: the quarter turn of the larger row.
            const Vec2 r0 = a.row(0);
            const Vec2 r1 = a.row(1);
            const Vec2 row = r0.norm() >= r1.norm() ? r0 : r1;
            const Vec2 eta = quarter_turn() * row;
            return Vec2(adjugate(f.Lambda).transpose() * eta);
        };
    };

    FieldPair pair;
    pair.chart = chart;
    pair.first = DirectionField{FieldKind::CurvatureLine1, make_dir(+1.0),
                                [rho](double u, double v) { return rho(u, v, +1.0); }, "rho+",
                                chart};
    pair.second = DirectionField{FieldKind::CurvatureLine2, make_dir(-1.0),
                                 [rho](double u, double v) { return rho(u, v, -1.0); }, "rho-",
                                 chart};
    return pair;
}

TracedCurve trace_flow(const DirectionField& f, const Vec2& q0, double step, int n_steps,
                       const Rect& domain) {
    if (!domain.contains(q0.x(), q0.y())) throw PreconditionFailed("trace seed outside domain");

    TracedCurve out;
    out.vertices.push_back({0.0, q0.x(), q0.y()});

    Vec2 q = q0;
    Vec2 prev = Vec2::Zero();
    bool have_prev = false;

    auto field_at = [&](const Vec2& p, const Vec2& align) {
        Vec2 d = f.dir(p.x(), p.y());
        if (align.squaredNorm() > 0.0 && d.dot(align) < 0.0) d = -d;
        return d;
    };

    for (int k = 1; k <= n_steps; ++k) {
        Vec2 k1;
        try {
            k1 = field_at(q, have_prev ? prev : Vec2::Zero());
        } catch (const Error&) {
            out.reason = Termination::LeftDomain;
            return out;
        }
        if (k1.norm() < 1e-12) {
            out.reason = Termination::FieldDegenerate;
            return out;
        }
        Vec2 next;
        try {
            const Vec2 k2 = field_at(q + 0.5 * step * k1, k1);
            const Vec2 k3 = field_at(q + 0.5 * step * k2, k1);
            const Vec2 k4 = field_at(q + step * k3, k1);
            next = q + (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        } catch (const Error&) {
            out.reason = Termination::LeftDomain;
            return out;
        }
        out.vertices.push_back({k * step, next.x(), next.y()});
        prev = k1;
        have_prev = true;
        q = next;
        if (!domain.contains(q.x(), q.y())) {
            out.reason = Termination::LeftDomain;
            return out;
        }
    }
    out.reason = Termination::StepsExhausted;
    return out;
}

namespace {

template <typename F>
ResidualReport residual_along(const FrontalSurface& s, const TracedCurve& curve, F&& fn) {
    ResidualReport report;
    for (const auto& vertex : curve.vertices) {
        if (!s.domain.contains(vertex.u, vertex.v)) continue;
        const double r = fn(vertex.u, vertex.v);
        report.per_vertex.push_back(r);
        report.max_abs = std::max(report.max_abs, std::abs(r));
    }
    return report;
}

}  // namespace

ResidualReport g_asymptotic_residual(const FrontalSurface& s, const TracedCurve& curve,
                                     const VelocityFn& velocity) {
    return residual_along(s, curve, [&](double u, double v) {
        const InvariantFrame f = invariant_frame(s, u, v);
        const Vec2 vel = velocity(u, v);
        return std::abs(vel.dot(f.II * vel));
    });
}

ResidualReport line_of_curvature_residual(const FrontalSurface& s, const TracedCurve& curve,
                                          const VelocityFn& velocity) {
    return residual_along(s, curve, [&](double u, double v) {
        const InvariantFrame f = invariant_frame(s, u, v);
        const Vec2 vel = velocity(u, v);
        return std::abs(f.lambda * vel.dot(quarter_turn() * f.alpha.transpose() * vel));
    });
}

ResidualReport gaussian_line_residual(const FrontalSurface& s, const TracedCurve& curve,
                                      const DirectionField& field) {
    if (!field.principal_value)
        throw PreconditionFailed("gaussian-line residual needs a curvature-line field");
    return residual_along(s, curve, [&](double u, double v) {
        const InvariantFrame f = invariant_frame(s, u, v);
        const Vec2 vel = field.dir(u, v);
        const double rho = field.principal_value(u, v);
        return (f.Dn * vel - rho * (f.Dx * vel)).norm();
    });
}

}  // namespace frontal
