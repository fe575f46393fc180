#include "frontal/surface.hpp"

namespace frontal {

ScalarField field_from_expr(const Expr& e) {
    return [e](const Jet2& u, const Jet2& v) { return e.eval(u, v); };
}

ScalarField1 field1_from_expr(const Expr& e) {
    if (e.uses_u() && e.uses_v())
        throw PreconditionFailed("single-variable parameter uses both 'u' and 'v': " + e.str());
    const bool via_v = e.uses_v();
    return [e, via_v](const Jet2& t) {
        const Jet2 unused = Jet2::constant(0.0, t.order);
        return via_v ? e.eval(unused, t) : e.eval(t, unused);
    };
}

const char* generator_kind_name(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::ExtendableNormal: return "extendable-normal";
        case GeneratorKind::Rank1Front: return "rank1-front";
        case GeneratorKind::Rank1FromH: return "rank1-from-h";
        case GeneratorKind::VanishingK: return "vanishing-K";
        case GeneratorKind::ExtendableKWave: return "extendable-K-wave";
        case GeneratorKind::ExtendableKLaplace: return "extendable-K-laplace";
        case GeneratorKind::Rank0Front: return "rank0-front";
        case GeneratorKind::FalseSingularity: return "false-singularity";
        case GeneratorKind::Rank1Normalized: return "rank1-normalized";
        case GeneratorKind::Parallel: return "parallel";
        case GeneratorKind::Derived: return "derived";
    }
    return "unknown";
}

std::array<Jet2, 3> unit_normal_jets(const SurfaceJets& j) {
    const auto& w = j.omega;
    const Jet2 c0 = w[1][0] * w[2][1] - w[2][0] * w[1][1];
    const Jet2 c1 = w[2][0] * w[0][1] - w[0][0] * w[2][1];
    const Jet2 c2 = w[0][0] * w[1][1] - w[1][0] * w[0][1];
    const Jet2 norm2 = c0 * c0 + c1 * c1 + c2 * c2;
    if (!(norm2.f > 1e-24))
        throw DegenerateBasis("tangent moving basis columns are dependent (||w1 x w2|| <= 1e-12)");
    const Jet2 inv = jet_recip(jet_sqrt(norm2));
    return {c0 * inv, c1 * inv, c2 * inv};
}

Vec3 normal_value(const SurfaceJets& j) {
    const auto n = unit_normal_jets(j);
    return Vec3(n[0].f, n[1].f, n[2].f);
}

FrontalSurface parallel_surface(const FrontalSurface& s, double l) {
    FrontalSurface p;
    p.domain = s.domain;
    p.kind = GeneratorKind::Parallel;
    p.provenance = "parallel(l=" + std::to_string(l) + ") of " + s.provenance;
    auto base = s.jets;
    p.jets = [base, l](double u, double v) {
        SurfaceJets j = base(u, v);
        const auto n = unit_normal_jets(j);
        for (int i = 0; i < 3; ++i) j.x[i] = j.x[i] + n[i] * l;
        return j;
    };
    return p;
}

FrontalSurface with_basis_change(const FrontalSurface& s, const Mat2& B) {
    if (std::abs(B.determinant()) < 1e-12)
        throw PreconditionFailed("basis change matrix must be invertible");
    FrontalSurface r = s;
    r.kind = GeneratorKind::Derived;
    r.provenance = "basis-change of " + s.provenance;
    r.b_field = nullptr;
    r.k_extension = nullptr;
    auto base = s.jets;
    r.jets = [base, B](double u, double v) {
        SurfaceJets j = base(u, v);
        for (int row = 0; row < 3; ++row) {
            const Jet2 a = j.omega[row][0];
            const Jet2 b = j.omega[row][1];
            j.omega[row][0] = a * B(0, 0) + b * B(1, 0);
            j.omega[row][1] = a * B(0, 1) + b * B(1, 1);
        }
        return j;
    };
    return r;
}

FrontalSurface with_omega_override(const FrontalSurface& s, const std::array<Expr, 6>& entries) {
    FrontalSurface r = s;
    r.kind = GeneratorKind::Derived;
    r.provenance = "omega-override of " + s.provenance;
    r.b_field = nullptr;
    r.k_extension = nullptr;
    auto base = s.jets;
    r.jets = [base, entries](double u, double v) {
        SurfaceJets j = base(u, v);
        const Jet2 ju = Jet2::seed_u(u, 1);
        const Jet2 jv = Jet2::seed_v(v, 1);
        for (int row = 0; row < 3; ++row)
            for (int col = 0; col < 2; ++col)
                j.omega[row][col] = entries[static_cast<std::size_t>(2 * row + col)].eval(ju, jv);
        return j;
    };
    return r;
}

}  // namespace frontal
