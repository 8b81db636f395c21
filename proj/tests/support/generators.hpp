#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "gmcusp/corner_riemann.hpp"
#include "gmcusp/euler.hpp"

namespace gmcusp::testing {

// Seeded state generators for the property tests.
class StateGenerator {
public:
    explicit StateGenerator(unsigned long long seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    /// Log-uniform magnitude, so that small and large values are both common.
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

    PrimitiveState state() {
        return {log_uniform(0.01, 100.0), uniform(-10.0, 10.0), uniform(-10.0, 10.0), log_uniform(0.01, 100.0)};
    }

    /// Moderate variations around a common state, as found at cell corners.
    PrimitiveState near(const PrimitiveState& s, double spread) {
        return {s.rho * std::exp(uniform(-spread, spread)), s.u + uniform(-spread, spread),
                s.v + uniform(-spread, spread), s.p * std::exp(uniform(-spread, spread))};
    }

    CornerStates corner() {
        if (uniform(0.0, 1.0) < 0.5) return {state(), state(), state(), state()};
        const PrimitiveState base = state();
        return {near(base, 0.5), near(base, 0.5), near(base, 0.5), near(base, 0.5)};
    }

    bool coin() { return uniform(0.0, 1.0) < 0.5; }

    std::mt19937_64& engine() noexcept { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline double max_abs(const FluxVector& f) {
    double m = 0.0;
    for (double c : f.c) m = std::max(m, std::abs(c));
    return m;
}

/// |a - b|_inf / max(|a|_inf, |b|_inf, floor).
inline double relative_difference(const FluxVector& a, const FluxVector& b, double floor = 1e-300) {
    return max_abs(a - b) / std::max({max_abs(a), max_abs(b), floor});
}

}  // namespace gmcusp::testing
