#pragma once

#include <functional>
#include <string>
#include <vector>

#include "frontal/frame.hpp"

namespace frontal {

enum class FieldKind { Asymptotic1, Asymptotic2, CurvatureLine1, CurvatureLine2 };

const char* field_kind_name(FieldKind k);

// Parameter-space direction field on a chart. Evaluators are pure; the
// direction is defined up to sign, which flow tracing keeps coherent
// along each trace.
struct DirectionField {
    FieldKind kind = FieldKind::Asymptotic1;
    std::function<Vec2(double, double)> dir;
    // Extended principal curvature along this branch (curvature-line
    // fields only; empty otherwise).
    std::function<double(double, double)> principal_value;
    std::string provenance;
    Rect chart;
};

struct FieldPair {
    DirectionField first, second;
    Rect chart;
};

// Direction fields whose integral curves have velocity in the null
// directions of the second fundamental form, from the analytic B field.
// Requires extendable normal curvature and extended Gaussian curvature
// < 0 on the chart. The chart is halved about the center (up to 6 times)
// until one factorization branch applies uniformly.
FieldPair asymptotic_fields(const FrontalSurface& s, const Vec2& center, double halfwidth);

// The constant fields (-1, sqrt(-c)) and (1, sqrt(-c)) on a wave-mode
// extendable-K surface; their coordinate net consists of curves with
// velocity^T II velocity = 0, across the singular set included.
FieldPair asymptotic_fields_front_k(const FrontalSurface& s);

// Fields whose traces are Gaussian lines of curvature: eigen branches of
// B^T (mu = Lambda B) pushed through adj(Lambda)^T. Requires distinct
// extended principal curvatures on the whole chart.
FieldPair curvature_line_fields(const FrontalSurface& s, const Vec2& center, double halfwidth);

enum class Termination { StepsExhausted, LeftDomain, FieldDegenerate };

const char* termination_name(Termination t);

struct TracedCurve {
    struct Vertex {
        double t, u, v;
    };
    std::vector<Vertex> vertices;  // strictly increasing t; inside the
                                   // domain except possibly the last
    Termination reason = Termination::StepsExhausted;
};

// Classic fixed-step RK4; stops at domain exit or where the field
// degenerates (norm < 1e-12). The first vertex is exactly q.
TracedCurve trace_flow(const DirectionField& f, const Vec2& q, double step, int n_steps,
                       const Rect& domain);

struct ResidualReport {
    std::vector<double> per_vertex;
    double max_abs = 0.0;
};

using VelocityFn = std::function<Vec2(double, double)>;

// max |vel^T II vel| along the curve; velocities come from the supplied
// evaluator (a field or an explicit curve tangent), not from differencing
// vertices.
ResidualReport g_asymptotic_residual(const FrontalSurface& s, const TracedCurve& curve,
                                     const VelocityFn& velocity);

// max |lambda * vel^T P alpha^T vel| along the curve.
ResidualReport line_of_curvature_residual(const FrontalSurface& s, const TracedCurve& curve,
                                          const VelocityFn& velocity);

// max ||Dn vel - rho Dx vel|| along a curvature-line trace, rho being the
// field's eigenvalue branch.
ResidualReport gaussian_line_residual(const FrontalSurface& s, const TracedCurve& curve,
                                      const DirectionField& field);

}  // namespace frontal
