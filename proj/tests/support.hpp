#pragma once

#include <cmath>
#include <functional>

#include "frontal/generators.hpp"
#include "frontal/rng.hpp"

namespace frontal::testsupport {

// Central finite differences of a plain scalar evaluation; the
// independent oracle for every jet coefficient.
struct FdJet {
    double f, fu, fv, fuu, fuv, fvv;
};

inline FdJet fd_oracle(const std::function<double(double, double)>& f, double u, double v,
                       double h = 1e-5) {
    FdJet r;
    r.f = f(u, v);
    r.fu = (f(u + h, v) - f(u - h, v)) / (2 * h);
    r.fv = (f(u, v + h) - f(u, v - h)) / (2 * h);
    r.fuu = (f(u + h, v) - 2 * r.f + f(u - h, v)) / (h * h);
    r.fvv = (f(u, v + h) - 2 * r.f + f(u, v - h)) / (h * h);
    r.fuv = (f(u + h, v + h) - f(u + h, v - h) - f(u - h, v + h) + f(u - h, v - h)) / (4 * h * h);
    return r;
}

inline bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

inline ScalarField sf(const char* text) { return field_from_expr(Expr::parse(text)); }
inline ScalarField1 sf1(const char* text) { return field1_from_expr(Expr::parse(text)); }

// Canonical test surfaces used across suites.

inline FrontalSurface quintic_sheet() {
    return gen_extendable_normal(sf("2/5*v^5 + v^2"), sf("-3*u*v / (2*(1+v^3)^3)"), sf1("1"),
                                 sf1("0"), Rect{-0.9, 0.9, -0.9, 0.9});
}

inline FrontalSurface plane_surface() {
    return gen_extendable_normal(sf("v"), sf("0"), sf1("0"), sf1("0"), Rect{-1, 1, -1, 1});
}

inline FrontalSurface cuspidal_edge() {
    return gen_rank1_front(sf("v"), sf1("0"), sf1("0"), Rect{-1, 1, -1, 1});
}

inline FrontalSurface rank1_z2() {
    return gen_rank1_front(sf("v^2"), sf1("0"), sf1("0"), Rect{-1, 1, -1, 1});
}

inline FrontalSurface rank0_cubic() {
    return gen_rank0_front(sf("(u^3+v^3)/6"), Rect{-1, 1, -1, 1});
}

inline FrontalSurface rank0_convex() {
    return gen_rank0_front(sf("(u^2+v^2)^2/4"), Rect{-1, 1, -1, 1});
}

inline FrontalSurface saddle_composition() {
    return gen_false_singularity(ImmersionKind::Graph, sf("u*v"), sf("u^3"), sf("v"),
                                 Rect{-0.8, 0.8, -0.8, 0.8});
}

inline FrontalSurface axis_saddle_composition() {
    return gen_false_singularity(ImmersionKind::Graph, sf("u^2 - v^2"), sf("u^3"), sf("v"),
                                 Rect{-0.8, 0.8, -0.8, 0.8});
}

inline FrontalSurface bowl_composition() {
    return gen_false_singularity(ImmersionKind::Graph, sf("u^2 + 2*v^2"), sf("u^3"), sf("v"),
                                 Rect{-0.6, 0.6, -0.6, 0.6});
}

inline FrontalSurface sphere_composition() {
    return gen_false_singularity(ImmersionKind::Sphere, nullptr, sf("u^3"), sf("v"),
                                 Rect{-0.7, 0.7, -0.7, 0.7});
}

inline FrontalSurface wave_cubic() {
    return gen_extendable_k_wave(-1.0, sf1("u^3/6"), sf1("u^3/6"), Rect{-1, 1, -1, 1});
}

}  // namespace frontal::testsupport
