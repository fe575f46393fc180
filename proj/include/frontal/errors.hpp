#pragma once

#include <stdexcept>
#include <string>

namespace frontal {

// Base for everything thrown by the library. The CLI maps subclasses to
// exit codes: config/precondition problems -> 2, numeric failures -> 3.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid input to a math operation (division by a zero-valued jet,
// log/sqrt of a nonpositive value, non-integer power of a negative base).
struct DomainError : Error {
    using Error::Error;
};

// A NaN/Inf coefficient appeared where a finite value is required.
struct NumericError : Error {
    using Error::Error;
};

// Generator or operation precondition violated by the caller's data.
struct PreconditionFailed : Error {
    using Error::Error;
};

// Tangent moving basis columns are (numerically) dependent at a point.
struct DegenerateBasis : Error {
    using Error::Error;
};

// Adaptive quadrature hit its recursion depth without meeting tolerance.
struct ToleranceNotMet : Error {
    using Error::Error;
};

// The sampled singular set contains a full grid cell.
struct NotProperFrontal : Error {
    using Error::Error;
};

// Requested an extension-based quantity on a surface whose normal
// curvature does not extend.
struct NotExtendable : Error {
    using Error::Error;
};

struct ZeroDirection : Error {
    using Error::Error;
};

// Relative principal curvatures coincide; directions are undefined.
struct UmbilicLike : Error {
    using Error::Error;
};

struct ComplexEigen : Error {
    using Error::Error;
};

// Extended principal curvatures collide somewhere on the requested chart.
struct UmbilicChart : Error {
    using Error::Error;
};

struct NonNegativeCurvature : Error {
    using Error::Error;
};

struct WrongGeneratorKind : Error {
    using Error::Error;
};

struct HarmonicityViolated : Error {
    using Error::Error;
};

// det Dm vanishes on a whole sampled cell in a composed generator.
struct NonProperComposition : Error {
    using Error::Error;
};

}  // namespace frontal
