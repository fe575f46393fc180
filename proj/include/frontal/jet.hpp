#pragma once

#include <cmath>
#include <string>

#include "frontal/errors.hpp"

namespace frontal {

// Truncated two-variable Taylor expansion at a point, order 1 or 2.
// Order-1 jets carry (f, f_u, f_v); order-2 jets add (f_uu, f_uv, f_vv).
// Arithmetic propagates derivatives exactly to the stored order; unused
// slots are kept at zero. Any non-finite coefficient throws rather than
// flowing into downstream results.
struct Jet2 {
    int order = 2;
    double f = 0.0;
    double fu = 0.0, fv = 0.0;
    double fuu = 0.0, fuv = 0.0, fvv = 0.0;

    Jet2() = default;
    Jet2(int ord, double value) : order(ord), f(value) {
        if (ord != 1 && ord != 2) throw DomainError("jet order must be 1 or 2");
    }

    static Jet2 constant(double value, int order = 2) { return Jet2(order, value); }

    // Coordinate seeds carry a unit first derivative in their own slot.
    static Jet2 seed_u(double u0, int order = 2) {
        Jet2 j(order, u0);
        j.fu = 1.0;
        return j;
    }
    static Jet2 seed_v(double v0, int order = 2) {
        Jet2 j(order, v0);
        j.fv = 1.0;
        return j;
    }

    Jet2 truncated(int new_order) const {
        Jet2 j = *this;
        if (new_order == 1) {
            j.order = 1;
            j.fuu = j.fuv = j.fvv = 0.0;
        }
        return j;
    }

    bool finite() const {
        return std::isfinite(f) && std::isfinite(fu) && std::isfinite(fv) &&
               std::isfinite(fuu) && std::isfinite(fuv) && std::isfinite(fvv);
    }
};

namespace detail {

inline const Jet2& checked(const Jet2& j, const char* what) {
    if (!j.finite()) throw NumericError(std::string("non-finite jet coefficient in ") + what);
    return j;
}

inline int common_order(const Jet2& a, const Jet2& b) {
    if (a.order != b.order) throw DomainError("jet orders differ in binary operation");
    return a.order;
}

}  // namespace detail

inline Jet2 operator-(const Jet2& a) {
    Jet2 r = a;
    r.f = -r.f;
    r.fu = -r.fu;
    r.fv = -r.fv;
    r.fuu = -r.fuu;
    r.fuv = -r.fuv;
    r.fvv = -r.fvv;
    return r;
}

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 r(detail::common_order(a, b), a.f + b.f);
    r.fu = a.fu + b.fu;
    r.fv = a.fv + b.fv;
    r.fuu = a.fuu + b.fuu;
    r.fuv = a.fuv + b.fuv;
    r.fvv = a.fvv + b.fvv;
    return detail::checked(r, "add");
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) { return a + (-b); }

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r(detail::common_order(a, b), a.f * b.f);
    r.fu = a.fu * b.f + a.f * b.fu;
    r.fv = a.fv * b.f + a.f * b.fv;
    if (r.order == 2) {
        r.fuu = a.fuu * b.f + 2.0 * a.fu * b.fu + a.f * b.fuu;
        r.fuv = a.fuv * b.f + a.fu * b.fv + a.fv * b.fu + a.f * b.fuv;
        r.fvv = a.fvv * b.f + 2.0 * a.fv * b.fv + a.f * b.fvv;
    }
    return detail::checked(r, "mul");
}

// Composition with a scalar function given by value and first/second
// derivative at a.f; this is the one chain rule everything unary uses.
inline Jet2 jet_chain(const Jet2& a, double phi, double dphi, double ddphi, const char* what) {
    Jet2 r(a.order, phi);
    r.fu = dphi * a.fu;
    r.fv = dphi * a.fv;
    if (a.order == 2) {
        r.fuu = ddphi * a.fu * a.fu + dphi * a.fuu;
        r.fuv = ddphi * a.fu * a.fv + dphi * a.fuv;
        r.fvv = ddphi * a.fv * a.fv + dphi * a.fvv;
    }
    return detail::checked(r, what);
}

inline Jet2 jet_recip(const Jet2& a) {
    if (a.f == 0.0) throw DomainError("division by a jet with zero value");
    const double inv = 1.0 / a.f;
    return jet_chain(a, inv, -inv * inv, 2.0 * inv * inv * inv, "recip");
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * jet_recip(b); }

inline Jet2 operator+(const Jet2& a, double c) { return a + Jet2::constant(c, a.order); }
inline Jet2 operator+(double c, const Jet2& a) { return a + c; }
inline Jet2 operator-(const Jet2& a, double c) { return a + (-c); }
inline Jet2 operator-(double c, const Jet2& a) { return (-a) + c; }
inline Jet2 operator*(const Jet2& a, double c) {
    Jet2 r = a;
    r.f *= c;
    r.fu *= c;
    r.fv *= c;
    r.fuu *= c;
    r.fuv *= c;
    r.fvv *= c;
    return detail::checked(r, "scale");
}
inline Jet2 operator*(double c, const Jet2& a) { return a * c; }
inline Jet2 operator/(const Jet2& a, double c) { return a * (1.0 / c); }
inline Jet2 operator/(double c, const Jet2& a) { return jet_recip(a) * c; }

inline Jet2 jet_sin(const Jet2& a) {
    const double s = std::sin(a.f);
    return jet_chain(a, s, std::cos(a.f), -s, "sin");
}

inline Jet2 jet_cos(const Jet2& a) {
    const double c = std::cos(a.f);
    return jet_chain(a, c, -std::sin(a.f), -c, "cos");
}

inline Jet2 jet_exp(const Jet2& a) {
    const double e = std::exp(a.f);
    return jet_chain(a, e, e, e, "exp");
}

inline Jet2 jet_log(const Jet2& a) {
    if (!(a.f > 0.0)) throw DomainError("log of nonpositive value");
    const double inv = 1.0 / a.f;
    return jet_chain(a, std::log(a.f), inv, -inv * inv, "log");
}

inline Jet2 jet_sqrt(const Jet2& a) {
    if (!(a.f > 0.0)) throw DomainError("sqrt of nonpositive value");
    const double s = std::sqrt(a.f);
    return jet_chain(a, s, 0.5 / s, -0.25 / (s * a.f), "sqrt");
}

// Integer power by repeated multiplication; exact at zero values, where
// the closed-form k*x^(k-1) chain would need 0^0 conventions.
inline Jet2 jet_pow_int(const Jet2& a, long long k) {
    if (k < 0) return jet_recip(jet_pow_int(a, -k));
    Jet2 acc = Jet2::constant(1.0, a.order);
    Jet2 base = a;
    unsigned long long e = static_cast<unsigned long long>(k);
    while (e > 0) {
        if (e & 1ULL) acc = acc * base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

// Real power, principal branch only: base must be strictly positive.
inline Jet2 jet_pow(const Jet2& a, const Jet2& b) {
    if (!(a.f > 0.0)) throw DomainError("power of a nonpositive base with non-integer exponent");
    return jet_exp(b * jet_log(a));
}

}  // namespace frontal
