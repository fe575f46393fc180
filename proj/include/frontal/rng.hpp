#pragma once

#include <cstdint>
#include <random>

namespace frontal {

// Deterministic across platforms: mt19937_64 is fully specified and the
// scaling below avoids implementation-defined distributions.
struct Rng {
    explicit Rng(std::uint64_t seed = 0x5eedf00d) : gen(seed) {}

    double uniform(double a, double b) {
        const double x = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        return a + (b - a) * x;
    }

    std::mt19937_64 gen;
};

}  // namespace frontal
