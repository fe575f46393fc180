#pragma once

#include <functional>

#include "frontal/jet.hpp"

namespace frontal {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;   // absolute error estimate
    int subintervals = 0;
};

struct JetQuadratureResult {
    Jet2 value;
    double error = 0.0;
    int subintervals = 0;
};

inline constexpr double kQuadTol = 1e-10;
inline constexpr int kQuadMaxDepth = 40;

// Adaptive 7-15 Gauss-Kronrod on [a,b], a <= b. Throws ToleranceNotMet
// once the recursion depth limit is reached with the tolerance unmet.
QuadratureResult integrate_1d(const std::function<double(double)>& f, double a, double b,
                              double tol = kQuadTol);

// Same rule applied coefficient-wise to a jet-valued integrand; this is
// differentiation under the integral sign for parameter-dependent
// integrands. The error estimate is the max over active coefficients.
JetQuadratureResult integrate_jet(const std::function<Jet2(double)>& f, double a, double b,
                                  int order, double tol = kQuadTol);

// Signed integral from 0 to x (negates and swaps when x < 0).
double integral_from_zero(const std::function<double(double)>& f, double x, double tol = kQuadTol);
Jet2 integral_from_zero_jet(const std::function<Jet2(double)>& f, double x, int order,
                            double tol = kQuadTol);

}  // namespace frontal
