#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "frontal/expr.hpp"
#include "frontal/rng.hpp"
#include "support.hpp"

using namespace frontal;
using testsupport::fd_oracle;

TEST_CASE("literal evaluation and precedence") {
    CHECK(Expr::parse("2*v^4 + 2*v").eval(0.0, 0.5) == doctest::Approx(1.125).epsilon(1e-15));
    CHECK(Expr::parse("u+v*u").eval(2.0, 3.0) == doctest::Approx(8.0).epsilon(1e-15));
    CHECK(Expr::parse("-u^2").eval(3.0, 0.0) == doctest::Approx(-9.0));
    CHECK(Expr::parse("u^-2").eval(2.0, 0.0) == doctest::Approx(0.25));
    CHECK(Expr::parse("2^3^2").eval(0.0, 0.0) == doctest::Approx(512.0));
    CHECK(Expr::parse(" 1 + 2 * ( 3 - v ) ").eval(0.0, 1.0) == doctest::Approx(5.0));
}

TEST_CASE("syntax errors carry byte offsets") {
    try {
        Expr::parse("u + * v");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 4);
    }
    CHECK_THROWS_AS(Expr::parse("(u+v"), SyntaxError);
    CHECK_THROWS_AS(Expr::parse("sin u"), SyntaxError);
    CHECK_THROWS_AS(Expr::parse(""), SyntaxError);
    try {
        Expr::parse("u + w");
        FAIL("expected unknown identifier");
    } catch (const SyntaxError& e) {
        CHECK(e.expected.find("unknown identifier") != std::string::npos);
        CHECK(e.offset == 4);
    }
}

TEST_CASE("jet evaluation of the rational example") {
    const Expr h = Expr::parse("-3*u*v / (2*(1+v^3)^3)");
    const Jet2 j = h.eval(Jet2::seed_u(0.0, 1), Jet2::seed_v(0.0, 1));
    const auto fd =
        fd_oracle([&](double u, double v) { return h.eval(u, v); }, 0.0, 0.0);
    CHECK(std::abs(j.f - fd.f) <= 1e-10);
    CHECK(std::abs(j.fu - fd.fu) <= 1e-6);
    CHECK(std::abs(j.fv - fd.fv) <= 1e-6);
    CHECK(j.f == 0.0);
    CHECK(j.fu == 0.0);
    CHECK(j.fv == 0.0);
}

TEST_CASE("domain errors propagate from jets") {
    CHECK_THROWS_AS(Expr::parse("sqrt(u)").eval(Jet2::seed_u(-1.0, 2), Jet2::seed_v(0.0, 2)),
                    DomainError);
    CHECK_THROWS_AS(Expr::parse("log(u)").eval(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(Expr::parse("u^0.5").eval(-2.0, 0.0), DomainError);
}

TEST_CASE("pythagorean identity is flat") {
    const Expr e = Expr::parse("sin(u)^2 + cos(u)^2");
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        const Jet2 j = e.eval(Jet2::seed_u(rng.uniform(-3, 3), 2), Jet2::seed_v(0.0, 2));
        CHECK(std::abs(j.f - 1.0) <= 1e-12);
        CHECK(std::abs(j.fu) <= 1e-12);
        CHECK(std::abs(j.fuu) <= 1e-12);
    }
}

namespace {

// Random well-formed expression text; log/sqrt/div arguments are kept in
// range by construction.
std::string random_expr(Rng& rng, int depth) {
    const auto pick = static_cast<int>(rng.uniform(0.0, depth <= 0 ? 3.0 : 12.0));
    char buf[64];
    switch (pick) {
        case 0: return "u";
        case 1: return "v";
        case 2:
            std::snprintf(buf, sizeof(buf), "%.3f", rng.uniform(-2.0, 2.0));
            return buf;
        case 3: return "(" + random_expr(rng, depth - 1) + "+" + random_expr(rng, depth - 1) + ")";
        case 4: return "(" + random_expr(rng, depth - 1) + "-" + random_expr(rng, depth - 1) + ")";
        case 5: return "(" + random_expr(rng, depth - 1) + ")*(" + random_expr(rng, depth - 1) + ")";
        case 6:
            return "(" + random_expr(rng, depth - 1) + ")/(2+(" + random_expr(rng, depth - 1) +
                   ")^2)";
        case 7: return "sin(" + random_expr(rng, depth - 1) + ")";
        case 8: return "cos(" + random_expr(rng, depth - 1) + ")";
        case 9: return "exp(sin(" + random_expr(rng, depth - 1) + "))";
        case 10: return "log(1+(" + random_expr(rng, depth - 1) + ")^2)";
        default: return "sqrt(1+(" + random_expr(rng, depth - 1) + ")^2)";
    }
}

}  // namespace

TEST_CASE("parse-print-parse reaches a fixpoint on random trees") {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const Expr a = Expr::parse(random_expr(rng, 4));
        const Expr b = Expr::parse(a.str());
        CHECK(a.same_structure(b));
        CHECK(a.str() == b.str());
    }
}

TEST_CASE("jet value slot agrees with the plain scalar walk") {
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        const Expr e = Expr::parse(random_expr(rng, 4));
        for (int k = 0; k < 5; ++k) {
            const double u = rng.uniform(-2, 2);
            const double v = rng.uniform(-2, 2);
            const double scalar = e.eval(u, v);
            const Jet2 j = e.eval(Jet2::seed_u(u, 2), Jet2::seed_v(v, 2));
            CHECK(std::abs(j.f - scalar) <= 1e-12 * (1.0 + std::abs(scalar)));
        }
    }
}

TEST_CASE("free-variable reporting") {
    CHECK(Expr::parse("u^2").uses_u());
    CHECK_FALSE(Expr::parse("u^2").uses_v());
    CHECK(Expr::parse("sin(v)").uses_v());
    CHECK_FALSE(Expr::parse("3.5").uses_u());
}
