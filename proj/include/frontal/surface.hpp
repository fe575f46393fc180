#pragma once

#include <array>
#include <functional>
#include <limits>
#include <string>

#include "frontal/expr.hpp"
#include "frontal/jet.hpp"
#include "frontal/linalg.hpp"

namespace frontal {

struct Rect {
    double u0 = -1.0, u1 = 1.0;
    double v0 = -1.0, v1 = 1.0;

    bool contains(double u, double v) const { return u >= u0 && u <= u1 && v >= v0 && v <= v1; }
    double umid() const { return 0.5 * (u0 + u1); }
    double vmid() const { return 0.5 * (v0 + v1); }
};

// Jet-evaluable scalar functions of two / one variables. Generators take
// these, so closed-form fields and parsed expressions mix freely.
using ScalarField = std::function<Jet2(const Jet2&, const Jet2&)>;
using ScalarField1 = std::function<Jet2(const Jet2&)>;

ScalarField field_from_expr(const Expr& e);

// Single-variable parameters accept either 'u' or 'v' as their variable;
// the lone free variable is bound to the argument.
ScalarField1 field1_from_expr(const Expr& e);

enum class GeneratorKind {
    ExtendableNormal,
    Rank1Front,
    Rank1FromH,
    VanishingK,
    ExtendableKWave,
    ExtendableKLaplace,
    Rank0Front,
    FalseSingularity,
    Rank1Normalized,
    Parallel,
    Derived,
};

const char* generator_kind_name(GeneratorKind k);

// Everything pointwise operations need: order-1 jets of the map's three
// coordinates and of the six tangent-moving-basis entries. First
// derivatives of integral-defined coordinates are assembled from closed
// forms by the generators, never from differentiating quadrature.
struct SurfaceJets {
    std::array<Jet2, 3> x;
    std::array<std::array<Jet2, 2>, 3> omega;
};

// A frontal together with an analytic tangent moving basis. Immutable
// after construction; evaluation is pure, so grid sweeps can run in
// parallel.
struct FrontalSurface {
    Rect domain;
    GeneratorKind kind = GeneratorKind::Derived;
    std::string provenance;
    std::function<SurfaceJets(double, double)> jets;

    // Optional analytic 2x2 field B with II_Omega = B * Lambda^T, present
    // when the generator supplies extendability evidence in closed form.
    std::function<Mat2(double, double)> b_field;

    // Optional analytic extension of the Gaussian curvature.
    std::function<double(double, double)> k_extension;

    // Optional pointwise |h_uu + c h_vv| for generators whose defining
    // function must solve that equation.
    std::function<double(double, double)> pde_residual;

    // Wave speed constant c (< 0) for surfaces built from the hyperbolic
    // curvature-extension construction; NaN otherwise.
    double wave_speed = std::numeric_limits<double>::quiet_NaN();

    bool has_b_field() const { return static_cast<bool>(b_field); }
    bool has_k_extension() const { return static_cast<bool>(k_extension); }
};

// Unit normal induced by the basis, as order-1 jets. Throws
// DegenerateBasis when ||w1 x w2|| <= 1e-12.
std::array<Jet2, 3> unit_normal_jets(const SurfaceJets& j);

Vec3 normal_value(const SurfaceJets& j);

// The parallel surface x + l*n with the same tangent moving basis.
FrontalSurface parallel_surface(const FrontalSurface& s, double l);

// Basis change Omega * B for a constant invertible B (testing hook for
// the change-of-basis invariances).
FrontalSurface with_basis_change(const FrontalSurface& s, const Mat2& B);

// Replaces the tangent moving basis by six expressions in (u,v); used by
// the CLI as a debugging hook and deliberately able to break invariants.
FrontalSurface with_omega_override(const FrontalSurface& s, const std::array<Expr, 6>& entries);

}  // namespace frontal
