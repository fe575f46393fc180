#include "frontal/generators.hpp"

#include <cmath>
#include <memory>

#include "frontal/frame.hpp"
#include "frontal/quadrature.hpp"

namespace frontal {

namespace {

constexpr double kOuterTol = 1e-10;
constexpr double kInnerTol = 1e-11;

// Value and first/second derivative of a single-variable field.
struct Fn1 {
    double f = 0.0, d1 = 0.0, d2 = 0.0;
};

Fn1 eval1(const ScalarField1& g, double x) {
    const Jet2 j = g(Jet2::seed_u(x, 2));
    return {j.f, j.fu, j.fuu};
}

Jet2 eval2(const ScalarField& g, double u, double v) {
    return g(Jet2::seed_u(u, 2), Jet2::seed_v(v, 2));
}

Jet2 order1(double f, double fu, double fv) {
    Jet2 j(1, f);
    j.fu = fu;
    j.fv = fv;
    if (!j.finite()) throw NumericError("non-finite surface jet");
    return j;
}

Jet2 const1(double f) { return Jet2::constant(f, 1); }

// Construction-time sanity: basis independence and the decomposition
// identity on a coarse grid.
void check_construction(const FrontalSurface& s) {
    const DecompositionResiduals r = decomposition_residuals(s, 5, 5);
    if (r.dx > 1e-7)
        throw NumericError("generator output violates Dx = Omega Lambda^T (residual " +
                           std::to_string(r.dx) + ")");
}

}  // namespace

// ---------------------------------------------------------------------------
// Rank-1 representation: y = (w, int lam + f1, int t lam + f2)
// ---------------------------------------------------------------------------

FrontalSurface gen_rank1_front(ScalarField lambda_hat, ScalarField1 f1, ScalarField1 f2,
                               Rect domain) {
    {
        const Jet2 at0 = lambda_hat(Jet2::constant(0.0, 1), Jet2::constant(0.0, 1));
        if (std::abs(at0.f) > 1e-12)
            throw PreconditionFailed("rank-1 generator needs lambda(0,0) = 0");
    }

    FrontalSurface s;
    s.domain = domain;
    s.kind = GeneratorKind::Rank1Front;
    s.provenance = "rank1-front";
    s.jets = [lambda_hat, f1, f2](double w, double z) {
        const Jet2 lam = eval2(lambda_hat, w, z);

        // One jet-valued quadrature per integral coordinate carries the
        // w-derivatives; z-derivatives are the integrand itself.
        auto lam_at = [&](double t) { return lambda_hat(Jet2::seed_u(w, 2), Jet2::constant(t, 2)); };
        const Jet2 int_lam = integral_from_zero_jet(lam_at, z, 2, kOuterTol);
        const Jet2 int_tlam = integral_from_zero_jet(
            [&](double t) { return lam_at(t) * t; }, z, 2, kOuterTol);

        const Fn1 F1 = eval1(f1, w);
        const Fn1 F2 = eval1(f2, w);

        Jet2 b(2, int_lam.f + F1.f);
        b.fu = int_lam.fu + F1.d1;
        b.fv = lam.f;
        b.fuu = int_lam.fuu + F1.d2;
        b.fuv = lam.fu;
        b.fvv = lam.fv;

        Jet2 c(2, int_tlam.f + F2.f);
        c.fu = int_tlam.fu + F2.d1;
        c.fv = z * lam.f;
        c.fuu = int_tlam.fuu + F2.d2;
        c.fuv = z * lam.fu;
        c.fvv = lam.f + z * lam.fv;

        SurfaceJets j;
        j.x = {Jet2::seed_u(w, 1), b.truncated(1), c.truncated(1)};
        j.omega[0] = {const1(1.0), const1(0.0)};
        j.omega[1] = {order1(b.fu, b.fuu, b.fuv), const1(1.0)};
        j.omega[2] = {order1(c.fu, c.fuu, c.fuv), Jet2::seed_v(z, 1)};
        return j;
    };
    check_construction(s);
    return s;
}

// ---------------------------------------------------------------------------
// Rank-1 potential form: y = (u, -h_v, ...)
// ---------------------------------------------------------------------------

FrontalSurface gen_rank1_from_h(ScalarField h, Rect domain) {
    FrontalSurface s;
    s.domain = domain;
    s.kind = GeneratorKind::Rank1FromH;
    s.provenance = "rank1-from-h";
    s.jets = [h](double u, double v) {
        const Jet2 H = eval2(h, u, v);

        const double i1 = integral_from_zero(
            [&](double t) {
                const Jet2 ht = eval2(h, t, v);
                return ht.fu - ht.fuv * v;
            },
            u, kOuterTol);
        const double i2 = integral_from_zero(
            [&](double t) { return -eval2(h, 0.0, t).fvv * t; }, v, kOuterTol);

        SurfaceJets j;
        j.x[0] = Jet2::seed_u(u, 1);
        j.x[1] = order1(-H.fv, -H.fuv, -H.fvv);
        // Derivatives from the basis relation, not from the quadrature.
        j.x[2] = order1(i1 + i2, H.fu - v * H.fuv, -v * H.fvv);
        j.omega[0] = {const1(1.0), const1(0.0)};
        j.omega[1] = {const1(0.0), const1(1.0)};
        j.omega[2] = {order1(H.fu, H.fuu, H.fuv), Jet2::seed_v(v, 1)};
        return j;
    };
    check_construction(s);
    return s;
}

// ---------------------------------------------------------------------------
// Vanishing Gaussian curvature (ruled strip)
// ---------------------------------------------------------------------------

FrontalSurface gen_vanishing_k(ScalarField1 r1, ScalarField1 r2, double c1, double c2,
                               Rect domain) {
    if (std::abs(eval1(r2, 0.0).d1) > 1e-12)
        throw PreconditionFailed("vanishing-K generator needs r2'(0) = 0");

    FrontalSurface s;
    s.domain = domain;
    s.kind = GeneratorKind::VanishingK;
    s.provenance = "vanishing-K (ruled, directrix (0, r2(v), r2(v)+c2))";
    s.jets = [r1, r2, c1, c2](double u, double v) {
        const Fn1 R1 = eval1(r1, v);
        const Fn1 R2 = eval1(r2, v);

        const double g1 = c1 - integral_from_zero([&](double t) { return eval1(r1, t).f; }, v,
                                                  kOuterTol);
        const double x3 = integral_from_zero(
                              [&](double t) {
                                  return t * (u * eval1(r1, t).d1 + eval1(r2, t).d1);
                              },
                              v, kOuterTol) +
                          c1 * u + c2;

        SurfaceJets j;
        j.x[0] = Jet2::seed_u(u, 1);
        j.x[1] = order1(u * R1.f + R2.f, R1.f, u * R1.d1 + R2.d1);
        j.x[2] = order1(x3, g1 + v * R1.f, v * (u * R1.d1 + R2.d1));
        j.omega[0] = {const1(1.0), const1(0.0)};
        j.omega[1] = {const1(0.0), const1(1.0)};
        j.omega[2] = {order1(g1, 0.0, -R1.f), Jet2::seed_v(v, 1)};
        return j;
    };
    s.k_extension = [](double, double) { return 0.0; };
    check_construction(s);
    return s;
}

// ---------------------------------------------------------------------------
// Extendable Gaussian curvature through the potential form
// ---------------------------------------------------------------------------

namespace {

FrontalSurface finish_extendable_k(ScalarField h, double c, GeneratorKind kind, Rect domain) {
    FrontalSurface s = gen_rank1_from_h(h, domain);
    s.kind = kind;
    s.wave_speed = c;
    s.provenance = kind == GeneratorKind::ExtendableKWave ? "extendable-K-wave"
                                                          : "extendable-K-laplace";
    s.k_extension = [h, c](double u, double v) {
        const double hu = eval2(h, u, v).fu;
        const double w = 1.0 + hu * hu + v * v;
        return c / (w * w);
    };
    s.pde_residual = [h, c](double u, double v) {
        const Jet2 j = eval2(h, u, v);
        return std::abs(j.fuu + c * j.fvv);
    };
    return s;
}

}  // namespace

FrontalSurface gen_extendable_k_wave(double c, ScalarField1 h1, ScalarField1 h2, Rect domain) {
    if (!(c < 0.0)) throw PreconditionFailed("wave mode needs a constant c < 0");
    const double k = std::sqrt(-c);
    ScalarField h = [h1, h2, k](const Jet2& u, const Jet2& v) {
        return h1(v - u * k) + h2(v + u * k);
    };
    return finish_extendable_k(std::move(h), c, GeneratorKind::ExtendableKWave, domain);
}

FrontalSurface gen_extendable_k_laplace(double c, ScalarField f, Rect domain) {
    if (!(c > 0.0)) throw PreconditionFailed("laplace mode needs a constant c > 0");
    double max_res = 0.0;
    for (int i = 0; i < 17; ++i) {
        const double u = domain.u0 + (domain.u1 - domain.u0) * i / 16.0;
        for (int kk = 0; kk < 17; ++kk) {
            const double v = domain.v0 + (domain.v1 - domain.v0) * kk / 16.0;
            const Jet2 j = eval2(f, u, v / std::sqrt(c));
            max_res = std::max(max_res, std::abs(j.fuu + j.fvv));
        }
    }
    if (max_res > 1e-8)
        throw HarmonicityViolated("F is not harmonic on the domain (max residual " +
                                  std::to_string(max_res) + ")");
    const double rsc = 1.0 / std::sqrt(c);
    ScalarField h = [f, rsc](const Jet2& u, const Jet2& v) { return f(u, v * rsc); };
    return finish_extendable_k(std::move(h), c, GeneratorKind::ExtendableKLaplace, domain);
}

// ---------------------------------------------------------------------------
// Rank-0 representation: y = (h_u, h_v, ...)
// ---------------------------------------------------------------------------

FrontalSurface gen_rank0_front(ScalarField h, Rect domain) {
    {
        const Jet2 at0 = eval2(h, 0.0, 0.0);
        if (std::abs(at0.fuu) > 1e-12 || std::abs(at0.fuv) > 1e-12 || std::abs(at0.fvv) > 1e-12)
            throw PreconditionFailed("rank-0 generator needs the Hessian of h to vanish at 0");
    }

    FrontalSurface s;
    s.domain = domain;
    s.kind = GeneratorKind::Rank0Front;
    s.provenance = "rank0-front";
    s.jets = [h](double u, double v) {
        const Jet2 H = eval2(h, u, v);

        const double i1 = integral_from_zero(
            [&](double t) {
                const Jet2 ht = eval2(h, t, v);
                return t * ht.fuu + v * ht.fuv;
            },
            u, kOuterTol);
        const double i2 =
            integral_from_zero([&](double t) { return t * eval2(h, 0.0, t).fvv; }, v, kOuterTol);

        SurfaceJets j;
        j.x[0] = order1(H.fu, H.fuu, H.fuv);
        j.x[1] = order1(H.fv, H.fuv, H.fvv);
        j.x[2] = order1(i1 + i2, u * H.fuu + v * H.fuv, u * H.fuv + v * H.fvv);
        j.omega[0] = {const1(1.0), const1(0.0)};
        j.omega[1] = {const1(0.0), const1(1.0)};
        j.omega[2] = {Jet2::seed_u(u, 1), Jet2::seed_v(v, 1)};
        return j;
    };
    check_construction(s);
    return s;
}

// ---------------------------------------------------------------------------
// Frontal with extendable normal curvature from (b, h, l, r)
// ---------------------------------------------------------------------------

namespace {

struct EnParams {
    ScalarField b, h;
    ScalarField1 l, r;
};

// Everything the point evaluation and the analytic B field need at a
// point. g2 = Psi + int l and g1 = int h2 b_v + int r come from the
// construction; their u-derivatives reduce to
//   Psi_u  = int (h_u b_v + h b_uv),
//   Psi_uu = int (h_uu b_v + 2 h_u b_uv - h_v b_uu) + [h b_uu]_0^v,
// the last by parts, which keeps all integrands within second-order jets.
struct EnState {
    Jet2 b2;
    double h_val = 0.0;
    double g1 = 0.0, g1u = 0.0, g1v = 0.0;
    double g2 = 0.0, g2u = 0.0, g2v = 0.0;
    double h1 = 0.0, h2 = 0.0;
    double c = 0.0, cu = 0.0, cv = 0.0;
};

EnState en_state(const EnParams& p, double u, double v) {
    auto b_at = [&](double uu, double vv) { return eval2(p.b, uu, vv); };
    auto h_at = [&](double uu, double vv) { return eval2(p.h, uu, vv); };

    EnState st;
    st.b2 = b_at(u, v);
    const Jet2 hj = h_at(u, v);
    st.h_val = hj.f;
    const Fn1 lu = eval1(p.l, u);
    const Fn1 ru = eval1(p.r, u);

    auto lint_at = [&](double x) {
        return integral_from_zero([&](double t) { return eval1(p.l, t).f; }, x, kInnerTol);
    };
    auto rint_at = [&](double x) {
        return integral_from_zero([&](double t) { return eval1(p.r, t).f; }, x, kInnerTol);
    };
    const double lint = lint_at(u);
    const double rint = rint_at(u);

    auto psi_at = [&](double x, double tol) {
        return integral_from_zero(
            [&](double t) {
                const Jet2 jb = b_at(u, t);
                const Jet2 jh = h_at(u, t);
                return jh.f * jb.fv;
            },
            x, tol);
    };
    auto psi_u_at = [&](double x, double tol) {
        return integral_from_zero(
            [&](double t) {
                const Jet2 jb = b_at(u, t);
                const Jet2 jh = h_at(u, t);
                return jh.fu * jb.fv + jh.f * jb.fuv;
            },
            x, tol);
    };
    const double psi = psi_at(v, kOuterTol);
    const double psi_u = psi_u_at(v, kOuterTol);

    st.g2 = psi + lint;
    st.g2u = psi_u + lu.f;
    st.g2v = hj.f * st.b2.fv;
    st.h2 = psi_u + lu.f - hj.f * st.b2.fu;

    auto h2_at = [&](double t) {
        const Jet2 jb = b_at(u, t);
        const Jet2 jh = h_at(u, t);
        return psi_u_at(t, kInnerTol) + lu.f - jh.f * jb.fu;
    };
    auto h2u_at = [&](double t) {
        const Jet2 jb = b_at(u, t);
        const Jet2 jh = h_at(u, t);
        const double psi_uu_boundary = jh.f * jb.fuu - h_at(u, 0.0).f * b_at(u, 0.0).fuu;
        const double psi_uu_t = integral_from_zero(
                                    [&](double tt) {
                                        const Jet2 ib = b_at(u, tt);
                                        const Jet2 ih = h_at(u, tt);
                                        return ih.fuu * ib.fv + 2.0 * ih.fu * ib.fuv -
                                               ih.fv * ib.fuu;
                                    },
                                    t, kInnerTol) +
                                psi_uu_boundary;
        return psi_uu_t + lu.d1 - (jh.fu * jb.fu + jh.f * jb.fuu);
    };

    st.g1 = integral_from_zero([&](double t) { return h2_at(t) * b_at(u, t).fv; }, v, kOuterTol) +
            rint;
    st.g1u = integral_from_zero(
                 [&](double t) {
                     const Jet2 jb = b_at(u, t);
                     return h2u_at(t) * jb.fv + h2_at(t) * jb.fuv;
                 },
                 v, kOuterTol) +
             ru.f;
    st.g1v = st.h2 * st.b2.fv;
    st.h1 = st.g1u - st.h2 * st.b2.fu;

    const double c_u0 = integral_from_zero([&](double t) { return rint_at(t); }, u, kOuterTol) +
                        integral_from_zero(
                            [&](double t) { return b_at(t, 0.0).fu * lint_at(t); }, u, kOuterTol);
    st.c = integral_from_zero(
               [&](double t) { return b_at(u, t).fv * (psi_at(t, kInnerTol) + lint); }, v,
               kOuterTol) +
           c_u0;
    st.cu = st.g1 + st.b2.fu * st.g2;
    st.cv = st.b2.fv * st.g2;
    return st;
}

}  // namespace

FrontalSurface gen_extendable_normal(ScalarField b, ScalarField h, ScalarField1 l, ScalarField1 r,
                                     Rect domain) {
    const auto params = std::make_shared<const EnParams>(
        EnParams{std::move(b), std::move(h), std::move(l), std::move(r)});

    FrontalSurface s;
    s.domain = domain;
    s.kind = GeneratorKind::ExtendableNormal;
    s.provenance = "extendable-normal";
    s.jets = [params](double u, double v) {
        const EnState st = en_state(*params, u, v);
        SurfaceJets j;
        j.x[0] = Jet2::seed_u(u, 1);
        j.x[1] = st.b2.truncated(1);
        j.x[2] = order1(st.c, st.cu, st.cv);
        j.omega[0] = {const1(1.0), const1(0.0)};
        j.omega[1] = {const1(0.0), const1(1.0)};
        j.omega[2] = {order1(st.g1, st.g1u, st.g1v), order1(st.g2, st.g2u, st.g2v)};
        return j;
    };
    s.b_field = [params](double u, double v) {
        const EnState st = en_state(*params, u, v);
        const double rho = std::sqrt(1.0 + st.g1 * st.g1 + st.g2 * st.g2);
        Mat2 c;
        c << st.h1, st.h2, st.h2, st.h_val;
        return Mat2(c / rho);
    };
    check_construction(s);
    return s;
}

// ---------------------------------------------------------------------------
// False singularities: immersion composed with a planar map
// ---------------------------------------------------------------------------

FrontalSurface gen_false_singularity(ImmersionKind immersion, ScalarField phi, ScalarField m1,
                                     ScalarField m2, Rect domain) {
    if (immersion == ImmersionKind::Sphere)
        phi = field_from_expr(Expr::parse("sqrt(1 - u^2 - v^2)"));
    if (!phi) throw PreconditionFailed("graph immersion needs a height function");

    // det Dm must not vanish on a whole sampled cell.
    {
        auto det_dm = [&](double u, double v) {
            const Jet2 a = eval2(m1, u, v);
            const Jet2 b = eval2(m2, u, v);
            return a.fu * b.fv - a.fv * b.fu;
        };
        const int n = 17;
        const double du = (domain.u1 - domain.u0) / (n - 1);
        const double dv = (domain.v1 - domain.v0) / (n - 1);
        std::vector<double> vals(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                vals[static_cast<std::size_t>(i) * n + k] =
                    det_dm(domain.u0 + i * du, domain.v0 + k * dv);
        auto zero = [&](int i, int k) {
            return std::abs(vals[static_cast<std::size_t>(i) * n + k]) <= 1e-12;
        };
        for (int i = 0; i + 1 < n; ++i)
            for (int k = 0; k + 1 < n; ++k)
                if (zero(i, k) && zero(i + 1, k) && zero(i, k + 1) && zero(i + 1, k + 1) &&
                    std::abs(det_dm(domain.u0 + (i + 0.5) * du, domain.v0 + (k + 0.5) * dv)) <=
                        1e-12)
                    throw NonProperComposition("det Dm vanishes on a whole grid cell");
    }

    FrontalSurface s;
    s.domain = domain;
    s.kind = GeneratorKind::FalseSingularity;
    s.provenance = immersion == ImmersionKind::Sphere ? "false-singularity (sphere chart)"
                                                      : "false-singularity (graph)";
    s.jets = [phi, m1, m2](double u, double v) {
        const Jet2 a = eval2(m1, u, v);
        const Jet2 b = eval2(m2, u, v);
        const Jet2 height = phi(a, b);
        // Jets of the immersion in its own chart, at the image point.
        const Jet2 p = eval2(phi, a.f, b.f);

        SurfaceJets j;
        j.x[0] = a.truncated(1);
        j.x[1] = b.truncated(1);
        j.x[2] = height.truncated(1);
        j.omega[0] = {const1(1.0), const1(0.0)};
        j.omega[1] = {const1(0.0), const1(1.0)};
        j.omega[2] = {order1(p.fu, p.fuu * a.fu + p.fuv * b.fu, p.fuu * a.fv + p.fuv * b.fv),
                      order1(p.fv, p.fuv * a.fu + p.fvv * b.fu, p.fuv * a.fv + p.fvv * b.fv)};
        return j;
    };
    s.b_field = [phi, m1, m2](double u, double v) {
        const double sa = eval2(m1, u, v).f;
        const double sb = eval2(m2, u, v).f;
        const Jet2 p = eval2(phi, sa, sb);
        const double rho = std::sqrt(1.0 + p.fu * p.fu + p.fv * p.fv);
        Mat2 c;
        c << p.fuu, p.fuv, p.fuv, p.fvv;
        return Mat2(c / rho);
    };
    s.k_extension = [phi, m1, m2](double u, double v) {
        const double sa = eval2(m1, u, v).f;
        const double sb = eval2(m2, u, v).f;
        const Jet2 p = eval2(phi, sa, sb);
        const double w = 1.0 + p.fu * p.fu + p.fv * p.fv;
        return (p.fuu * p.fvv - p.fuv * p.fuv) / (w * w);
    };
    check_construction(s);
    return s;
}

// ---------------------------------------------------------------------------
// Rank-1 front normalization to nonvanishing K_rel
// ---------------------------------------------------------------------------

FrontalSurface rank1_to_nonvanishing(const FrontalSurface& s) {
    if (s.kind != GeneratorKind::Rank1Front)
        throw WrongGeneratorKind("normalization applies to rank-1 front generator output");

    FrontalSurface r;
    r.domain = s.domain;
    r.kind = GeneratorKind::Rank1Normalized;
    r.provenance = "rank1-normalized of " + s.provenance;
    auto base = s.jets;
    r.jets = [base](double w, double z) {
        SurfaceJets j = base(w, z);
        j.x[2] = j.x[2] + jet_pow_int(Jet2::seed_u(w, 1), 2);
        j.omega[2][0] = j.omega[2][0] + Jet2::seed_u(w, 1) * 2.0;
        return j;
    };

    const InvariantFrame f0 = invariant_frame(r, 0.0, 0.0);
    if (std::abs(f0.K_rel) <= 1e-8)
        throw NumericError("normalized surface still has K_rel(0,0) = 0");
    check_construction(r);
    return r;
}

}  // namespace frontal
