#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frontal/curves.hpp"
#include "frontal/singular_set.hpp"
#include "support.hpp"

using namespace frontal;
using namespace frontal::testsupport;

namespace {

DirectionField constant_field(const Vec2& w) {
    return DirectionField{FieldKind::Asymptotic1, [w](double, double) { return w; }, nullptr,
                          "constant", Rect{-10, 10, -10, 10}};
}

TracedCurve segment_curve(const Vec2& from, const Vec2& dir, double length, int n) {
    TracedCurve c;
    for (int i = 0; i <= n; ++i) {
        const Vec2 p = from + (length * i / n) * dir;
        c.vertices.push_back({length * i / n, p.x(), p.y()});
    }
    c.reason = Termination::StepsExhausted;
    return c;
}

}  // namespace

TEST_CASE("quarter-turn matrix identities") {
    const Mat2 p = quarter_turn();
    CHECK((p.transpose() + p).cwiseAbs().maxCoeff() == 0.0);
    CHECK((p * p + Mat2::Identity()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("trace termination modes") {
    const Rect domain{-2, 2, -2, 2};

    const TracedCurve dead = trace_flow(constant_field(Vec2::Zero()), Vec2(0, 0), 0.01, 50, domain);
    CHECK(dead.vertices.size() == 1);
    CHECK(dead.reason == Termination::FieldDegenerate);

    const TracedCurve diag =
        trace_flow(constant_field(Vec2(1, 1)), Vec2(0, 0), 0.01, 100, domain);
    CHECK(diag.reason == Termination::StepsExhausted);
    REQUIRE(diag.vertices.size() == 101);
    CHECK(std::abs(diag.vertices.back().u - 1.0) <= 1e-12);
    CHECK(std::abs(diag.vertices.back().v - 1.0) <= 1e-12);

    const TracedCurve exits =
        trace_flow(constant_field(Vec2(1, 0)), Vec2(1.95, 0), 0.01, 100, domain);
    CHECK(exits.reason == Termination::LeftDomain);
    for (std::size_t i = 0; i + 1 < exits.vertices.size(); ++i)
        CHECK(domain.contains(exits.vertices[i].u, exits.vertices[i].v));

    CHECK_THROWS_AS(trace_flow(constant_field(Vec2(1, 0)), Vec2(5, 0), 0.01, 10, domain),
                    PreconditionFailed);
}

TEST_CASE("integrator shows fourth-order endpoint convergence") {
    const DirectionField field{
        FieldKind::Asymptotic1,
        [](double u, double v) { return Vec2(std::sin(v) + 1.5, std::cos(u)); }, nullptr,
        "smooth", Rect{-10, 10, -10, 10}};
    const Rect domain{-10, 10, -10, 10};
    const double T = 1.6;

    auto endpoint = [&](double h) {
        const TracedCurve c = trace_flow(field, Vec2(0, 0), h, static_cast<int>(T / h + 0.5), domain);
        return Vec2(c.vertices.back().u, c.vertices.back().v);
    };
    const Vec2 reference = endpoint(T / 1024);
    const double e1 = (endpoint(T / 32) - reference).norm();
    const double e2 = (endpoint(T / 64) - reference).norm();
    const double e3 = (endpoint(T / 128) - reference).norm();
    CHECK(e1 / e2 >= 12.0);
    CHECK(e1 / e2 <= 20.0);
    CHECK(e2 / e3 >= 12.0);
    CHECK(e2 / e3 <= 20.0);
}

TEST_CASE("asymptotic fields on the saddle composition (mixed-term branch)") {
    const FrontalSurface s = saddle_composition();
    const FieldPair pair = asymptotic_fields(s, Vec2(0.2, 0.1), 0.5);
    CHECK(pair.first.provenance == "case1");

    for (const DirectionField* f : {&pair.first, &pair.second}) {
        const TracedCurve curve = trace_flow(*f, Vec2(0.2, 0.1), 1e-3, 600, s.domain);
        CHECK(curve.vertices.size() > 100);
        const ResidualReport r = g_asymptotic_residual(s, curve, f->dir);
        CHECK(r.max_abs <= 1e-6);
    }

    // The two inner directions stay independent across the chart.
    Rng rng(47);
    for (int i = 0; i < 100; ++i) {
        const double u = rng.uniform(pair.chart.u0, pair.chart.u1);
        const double v = rng.uniform(pair.chart.v0, pair.chart.v1);
        const InvariantFrame fr = invariant_frame(s, u, v);
        if (std::abs(fr.lambda) < 1e-3) continue;
        Mat2 m;
        m.col(0) = pair.first.dir(u, v);
        m.col(1) = pair.second.dir(u, v);
        CHECK(std::abs(m.determinant()) > 1e-10);
    }
}

TEST_CASE("asymptotic fields on the axis-aligned saddle (diagonal branch)") {
    const FrontalSurface s = axis_saddle_composition();
    const FieldPair pair = asymptotic_fields(s, Vec2(0.15, -0.1), 0.4);
    CHECK(pair.first.provenance == "case2");
    for (const DirectionField* f : {&pair.first, &pair.second}) {
        const TracedCurve curve = trace_flow(*f, Vec2(0.15, -0.1), 1e-3, 500, s.domain);
        const ResidualReport r = g_asymptotic_residual(s, curve, f->dir);
        CHECK(r.max_abs <= 1e-6);
    }
}

TEST_CASE("asymptotic traces cross the singular set cleanly") {
    const FrontalSurface s = saddle_composition();  // singular line u = 0
    const FieldPair pair = asymptotic_fields(s, Vec2(0.3, 0.2), 0.45);
    // First family runs in the -u direction and crosses u = 0.
    const TracedCurve curve = trace_flow(pair.first, Vec2(0.3, 0.2), 1e-3, 700, s.domain);
    bool crossed = false;
    for (const auto& v : curve.vertices) crossed = crossed || v.u < -0.05;
    CHECK(crossed);
    CHECK(g_asymptotic_residual(s, curve, pair.first.dir).max_abs <= 1e-6);
}

TEST_CASE("positive curvature rejects asymptotic fields") {
    CHECK_THROWS_AS(asymptotic_fields(sphere_composition(), Vec2(0, 0), 0.4),
                    NonNegativeCurvature);
    CHECK_THROWS_AS(asymptotic_fields(cuspidal_edge(), Vec2(0, 0), 0.4), NotExtendable);
}

TEST_CASE("wave-mode coordinate fields") {
    const FrontalSurface s = wave_cubic();
    const FieldPair pair = asymptotic_fields_front_k(s);
    CHECK((pair.first.dir(0.3, 0.4) - Vec2(-1, 1)).norm() == 0.0);
    CHECK((pair.second.dir(0.3, 0.4) - Vec2(1, 1)).norm() == 0.0);

    // Straight parameter lines; residual stays flat across v = 0.
    const TracedCurve curve = trace_flow(pair.second, Vec2(-0.5, -0.5), 1e-3, 800, s.domain);
    CHECK(curve.vertices.size() == 801);
    bool crossed = false;
    for (const auto& v : curve.vertices) {
        CHECK(std::abs((v.u + 0.5) - (v.v + 0.5)) <= 1e-12);
        crossed = crossed || v.v > 0.1;
    }
    CHECK(crossed);
    CHECK(g_asymptotic_residual(s, curve, pair.second.dir).max_abs <= 1e-6);

    Mat2 m;
    m.col(0) = pair.first.dir(0, 0);
    m.col(1) = pair.second.dir(0, 0);
    CHECK(std::abs(m.determinant()) == doctest::Approx(2.0 * std::sqrt(1.0)).epsilon(1e-15));

    CHECK_THROWS_AS(asymptotic_fields_front_k(cuspidal_edge()), WrongGeneratorKind);
    CHECK_THROWS_AS(asymptotic_fields_front_k(saddle_composition()), WrongGeneratorKind);
}

TEST_CASE("curvature-line fields trace Gaussian lines of curvature") {
    const FrontalSurface s = bowl_composition();
    const FieldPair pair = curvature_line_fields(s, Vec2(0, 0), 0.2);

    for (const DirectionField* f : {&pair.first, &pair.second}) {
        const TracedCurve curve = trace_flow(*f, Vec2(0.05, 0.05), 2e-3, 400, s.domain);
        CHECK(curve.vertices.size() > 50);
        CHECK(line_of_curvature_residual(s, curve, f->dir).max_abs <= 1e-6);
        CHECK(gaussian_line_residual(s, curve, *f).max_abs <= 1e-6);
    }

    Rng rng(53);
    for (int i = 0; i < 100; ++i) {
        const double u = rng.uniform(pair.chart.u0, pair.chart.u1);
        const double v = rng.uniform(pair.chart.v0, pair.chart.v1);
        const InvariantFrame fr = invariant_frame(s, u, v);
        if (std::abs(fr.lambda) < 1e-3) continue;
        Mat2 m;
        m.col(0) = pair.first.dir(u, v);
        m.col(1) = pair.second.dir(u, v);
        CHECK(std::abs(m.determinant()) > 1e-10);
    }

    CHECK_THROWS_AS(curvature_line_fields(sphere_composition(), Vec2(0, 0), 0.3), UmbilicChart);
    CHECK_THROWS_AS(curvature_line_fields(cuspidal_edge(), Vec2(0, 0), 0.3), NotExtendable);
}

TEST_CASE("singular curves of a bounded-curvature wavefront are G-asymptotic") {
    const FrontalSurface s =
        gen_rank1_front(sf("v*(2+sin(u))"), sf1("0"), sf1("0"), Rect{-1, 1, -1, 1});

    // Bounded Gaussian curvature on the chart (precondition of the claim).
    Rng rng(59);
    double max_k = 0.0;
    for (int i = 0; i < 400; ++i) {
        const InvariantFrame f = invariant_frame(s, rng.uniform(-1, 1), rng.uniform(-1, 1));
        if (std::abs(f.lambda) < 1e-3) continue;
        const auto classical = classical_curvatures(f);
        if (classical) max_k = std::max(max_k, std::abs(classical->K));
    }
    CHECK(max_k < 1e3);

    // The singular set is z = 0; walk along it.
    const auto lines = singular_set(s, 33, 33);
    REQUIRE_FALSE(lines.empty());
    TracedCurve curve;
    double t = 0.0;
    for (const Vec2& p : lines.front()) curve.vertices.push_back({t += 1.0, p.x(), p.y()});
    const auto unit_u = [](double, double) { return Vec2(1, 0); };
    CHECK(g_asymptotic_residual(s, curve, unit_u).max_abs <= 1e-6);

    // Singular curves are lines of curvature: the lambda factor kills the
    // defect entirely.
    CHECK(line_of_curvature_residual(s, curve, unit_u).max_abs <= 1e-10);
}

TEST_CASE("negative controls show genuinely nonzero residuals") {
    const FrontalSurface saddle = saddle_composition();
    const TracedCurve diag = segment_curve(Vec2(0.3, -0.2), Vec2(1, 1).normalized(), 0.3, 30);
    const auto unit_diag = [](double, double) { return Vec2(1, 1).normalized(); };
    CHECK(g_asymptotic_residual(saddle, diag, unit_diag).max_abs > 1e-2);

    const FrontalSurface bowl = bowl_composition();
    const TracedCurve diag2 = segment_curve(Vec2(0.35, -0.15), Vec2(1, 1).normalized(), 0.2, 20);
    CHECK(line_of_curvature_residual(bowl, diag2, unit_diag).max_abs > 1e-3);
}
