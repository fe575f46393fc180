#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frontal/jet.hpp"
#include "frontal/rng.hpp"
#include "support.hpp"

using namespace frontal;
using testsupport::fd_oracle;

TEST_CASE("coordinate and constant seeds") {
    const Jet2 u = Jet2::seed_u(3.0, 1);
    CHECK(u.f == 3.0);
    CHECK(u.fu == 1.0);
    CHECK(u.fv == 0.0);

    const Jet2 c = Jet2::constant(7.0, 2);
    CHECK(c.f == 7.0);
    CHECK(c.fu == 0.0);
    CHECK(c.fv == 0.0);
    CHECK(c.fuu == 0.0);

    const Jet2 v = Jet2::seed_v(-1.0, 2);
    CHECK(v.f == -1.0);
    CHECK(v.fv == 1.0);
    CHECK(v.fu == 0.0);
    CHECK(v.fuu == 0.0);
    CHECK(v.fuv == 0.0);
    CHECK(v.fvv == 0.0);
}

TEST_CASE("product rule at a point") {
    const Jet2 r = Jet2::seed_u(1.0, 1) * Jet2::seed_v(2.0, 1);
    CHECK(r.f == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(r.fu == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(r.fv == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("sin truncation at the origin") {
    const Jet2 r = jet_sin(Jet2::seed_u(0.0, 2));
    CHECK(r.f == 0.0);
    CHECK(r.fu == 1.0);
    CHECK(r.fuu == 0.0);
}

TEST_CASE("inverse norm factor at the origin matches finite differences") {
    auto f = [](double u, double v) { return 1.0 / std::sqrt(1.0 + u * u + v * v); };
    auto jet_f = [](const Jet2& u, const Jet2& v) {
        return jet_recip(jet_sqrt(1.0 + u * u + v * v));
    };
    const Jet2 r = jet_f(Jet2::seed_u(0.0, 1), Jet2::seed_v(0.0, 1));
    const auto fd = fd_oracle(f, 0.0, 0.0);
    CHECK(r.f == doctest::Approx(fd.f).epsilon(1e-6));
    CHECK(r.fu == doctest::Approx(fd.fu).epsilon(1e-6));
    CHECK(r.fv == doctest::Approx(fd.fv).epsilon(1e-6));
    CHECK(r.f == 1.0);
    CHECK(std::abs(r.fu) < 1e-15);
    CHECK(std::abs(r.fv) < 1e-15);
}

namespace {

// Small catalog of smooth two-variable functions with jet and scalar
// versions, for the finite-difference property test.
struct Probe {
    const char* name;
    std::function<Jet2(const Jet2&, const Jet2&)> jet;
    std::function<double(double, double)> scalar;
};

const std::vector<Probe>& probes() {
    static const std::vector<Probe> list = {
        {"add", [](const Jet2& u, const Jet2& v) { return u + v; },
         [](double u, double v) { return u + v; }},
        {"sub-mul", [](const Jet2& u, const Jet2& v) { return u - v * u; },
         [](double u, double v) { return u - v * u; }},
        {"div", [](const Jet2& u, const Jet2& v) { return u / (2.0 + v * v); },
         [](double u, double v) { return u / (2.0 + v * v); }},
        {"sin-cos", [](const Jet2& u, const Jet2& v) { return jet_sin(u * v) + jet_cos(u - v); },
         [](double u, double v) { return std::sin(u * v) + std::cos(u - v); }},
        {"exp", [](const Jet2& u, const Jet2& v) { return jet_exp(u * 0.5 - v * 0.25); },
         [](double u, double v) { return std::exp(0.5 * u - 0.25 * v); }},
        {"log", [](const Jet2& u, const Jet2& v) { return jet_log(1.0 + u * u + v * v); },
         [](double u, double v) { return std::log(1.0 + u * u + v * v); }},
        {"sqrt", [](const Jet2& u, const Jet2& v) { return jet_sqrt(1.0 + u * u * v * v); },
         [](double u, double v) { return std::sqrt(1.0 + u * u * v * v); }},
        {"intpow", [](const Jet2& u, const Jet2& v) { return jet_pow_int(u + v * 2.0, 5); },
         [](double u, double v) { return std::pow(u + 2.0 * v, 5); }},
        {"realpow",
         [](const Jet2& u, const Jet2& v) { return jet_pow(2.0 + u, Jet2::constant(1.5, u.order) + v * 0.0); },
         [](double u, double) { return std::pow(2.0 + u, 1.5); }},
    };
    return list;
}

}  // namespace

TEST_CASE("all operations agree with central finite differences") {
    Rng rng(42);
    for (const Probe& p : probes()) {
        CAPTURE(p.name);
        for (int trial = 0; trial < 25; ++trial) {
            const double u = rng.uniform(-1.5, 1.5);
            const double v = rng.uniform(-1.5, 1.5);
            const Jet2 j = p.jet(Jet2::seed_u(u, 2), Jet2::seed_v(v, 2));
            const auto fd = fd_oracle(p.scalar, u, v);
            const double scale = 1.0 + std::abs(fd.f);
            CHECK(std::abs(j.f - fd.f) <= 1e-12 * scale);
            CHECK(std::abs(j.fu - fd.fu) <= 1e-6 * (1.0 + std::abs(fd.fu)));
            CHECK(std::abs(j.fv - fd.fv) <= 1e-6 * (1.0 + std::abs(fd.fv)));
            CHECK(std::abs(j.fuu - fd.fuu) <= 2e-5 * (1.0 + std::abs(fd.fuu)));
            CHECK(std::abs(j.fuv - fd.fuv) <= 2e-5 * (1.0 + std::abs(fd.fuv)));
            CHECK(std::abs(j.fvv - fd.fvv) <= 2e-5 * (1.0 + std::abs(fd.fvv)));
        }
    }
}

TEST_CASE("value-level algebra on random triples") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Jet2 a = Jet2::seed_u(rng.uniform(-2, 2), 2) * rng.uniform(-1, 1);
        const Jet2 b = Jet2::seed_v(rng.uniform(-2, 2), 2) * rng.uniform(-1, 1);
        const Jet2 c = Jet2::constant(rng.uniform(-2, 2), 2);
        const Jet2 assoc = (a + b) + c - (a + (b + c));
        CHECK(std::abs(assoc.f) <= 1e-12);
        const Jet2 dist = a * (b + c) - (a * b + a * c);
        CHECK(std::abs(dist.f) <= 1e-12);
        CHECK(std::abs(dist.fu) <= 1e-12);
        CHECK(std::abs(dist.fvv) <= 1e-12);
    }
}

TEST_CASE("domain errors") {
    const Jet2 zero = Jet2::constant(0.0, 2);
    const Jet2 minus = Jet2::constant(-1.0, 2);
    CHECK_THROWS_AS(jet_recip(zero), DomainError);
    CHECK_THROWS_AS(Jet2::constant(1.0, 2) / zero, DomainError);
    CHECK_THROWS_AS(jet_sqrt(minus), DomainError);
    CHECK_THROWS_AS(jet_sqrt(zero), DomainError);
    CHECK_THROWS_AS(jet_log(zero), DomainError);
    CHECK_THROWS_AS(jet_pow(minus, Jet2::constant(0.5, 2)), DomainError);
    CHECK_THROWS_AS(jet_pow_int(zero, -2), DomainError);
}

TEST_CASE("order discipline and non-finite rejection") {
    CHECK_THROWS_AS(Jet2::seed_u(1.0, 1) + Jet2::seed_v(1.0, 2), DomainError);
    CHECK_THROWS_AS(Jet2(3, 1.0), DomainError);
    CHECK_THROWS_AS(jet_exp(Jet2::constant(1e9, 2)), NumericError);
}
