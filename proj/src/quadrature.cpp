#include "frontal/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace frontal {

namespace {

// 7-15 Gauss-Kronrod abscissae/weights (positive half, QUADPACK dqk15).
constexpr std::array<double, 8> kXgk = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679,  0.1903505780647854,  0.2044329400752989, 0.2094821410847278};
// 7-point Gauss weights, matching kXgk indices 1,3,5,7.
constexpr std::array<double, 4> kWg = {0.1294849661688697, 0.2797053914892767,
                                       0.3818300505051189, 0.4179591836734694};

struct Panel {
    double value;
    double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(mid);
    double kronrod = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double sum = f(mid - dx) + f(mid + dx);
        kronrod += kWgk[i] * sum;
        if (i % 2 == 1) gauss += kWg[i / 2] * sum;
    }
    kronrod *= half;
    gauss *= half;
    return {kronrod, std::abs(kronrod - gauss)};
}

void adapt(const std::function<double(double)>& f, double a, double b, double tol, int depth,
           double& value, double& error, int& count) {
    const Panel p = gk15(f, a, b);
    ++count;
    // Accept once inside tolerance or at the roundoff floor of the panel;
    // refining below that floor cannot improve the estimate.
    const double floor = std::abs(p.value) * 50.0 * 2.220446049250313e-16;
    if (p.error <= tol || p.error <= floor || b - a <= 0.0) {
        value += p.value;
        error += p.error;
        return;
    }
    if (depth >= kQuadMaxDepth) throw ToleranceNotMet("quadrature depth limit reached");
    const double mid = 0.5 * (a + b);
    adapt(f, a, mid, 0.5 * tol, depth + 1, value, error, count);
    adapt(f, mid, b, 0.5 * tol, depth + 1, value, error, count);
}

struct JetPanel {
    Jet2 value;
    double error;
};

double max_abs_coeff(const Jet2& j) {
    double m = std::abs(j.f);
    m = std::max(m, std::abs(j.fu));
    m = std::max(m, std::abs(j.fv));
    if (j.order == 2) {
        m = std::max(m, std::abs(j.fuu));
        m = std::max(m, std::abs(j.fuv));
        m = std::max(m, std::abs(j.fvv));
    }
    return m;
}

JetPanel gk15_jet(const std::function<Jet2(double)>& f, double a, double b, int order) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const Jet2 fc = f(mid);
    Jet2 kronrod = fc * kWgk[7];
    Jet2 gauss = fc * kWg[3];
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const Jet2 sum = f(mid - dx) + f(mid + dx);
        kronrod = kronrod + sum * kWgk[i];
        if (i % 2 == 1) gauss = gauss + sum * kWg[i / 2];
    }
    kronrod = kronrod * half;
    gauss = gauss * half;
    (void)order;
    return {kronrod, max_abs_coeff(kronrod - gauss)};
}

void adapt_jet(const std::function<Jet2(double)>& f, double a, double b, int order, double tol,
               int depth, Jet2& value, double& error, int& count) {
    const JetPanel p = gk15_jet(f, a, b, order);
    ++count;
    const double floor = max_abs_coeff(p.value) * 50.0 * 2.220446049250313e-16;
    if (p.error <= tol || p.error <= floor || b - a <= 0.0) {
        value = value + p.value;
        error += p.error;
        return;
    }
    if (depth >= kQuadMaxDepth) throw ToleranceNotMet("quadrature depth limit reached");
    const double mid = 0.5 * (a + b);
    adapt_jet(f, a, mid, order, 0.5 * tol, depth + 1, value, error, count);
    adapt_jet(f, mid, b, order, 0.5 * tol, depth + 1, value, error, count);
}

}  // namespace

QuadratureResult integrate_1d(const std::function<double(double)>& f, double a, double b,
                              double tol) {
    if (!(a <= b)) throw PreconditionFailed("integrate_1d requires a <= b");
    if (a == b) return {0.0, 0.0, 0};
    QuadratureResult r;
    adapt(f, a, b, tol, 0, r.value, r.error, r.subintervals);
    if (!std::isfinite(r.value)) throw NumericError("non-finite quadrature value");
    return r;
}

JetQuadratureResult integrate_jet(const std::function<Jet2(double)>& f, double a, double b,
                                  int order, double tol) {
    if (!(a <= b)) throw PreconditionFailed("integrate_jet requires a <= b");
    JetQuadratureResult r;
    r.value = Jet2::constant(0.0, order);
    if (a == b) return r;
    adapt_jet(f, a, b, order, tol, 0, r.value, r.error, r.subintervals);
    if (!r.value.finite()) throw NumericError("non-finite quadrature value");
    return r;
}

double integral_from_zero(const std::function<double(double)>& f, double x, double tol) {
    if (x >= 0.0) return integrate_1d(f, 0.0, x, tol).value;
    return -integrate_1d(f, x, 0.0, tol).value;
}

Jet2 integral_from_zero_jet(const std::function<Jet2(double)>& f, double x, int order, double tol) {
    if (x >= 0.0) return integrate_jet(f, 0.0, x, order, tol).value;
    return -integrate_jet(f, x, 0.0, order, tol).value;
}

}  // namespace frontal
