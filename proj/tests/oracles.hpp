#pragma once

// Test-only numeric oracles, independent of the library code paths they
// check.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracles {

// Composite Simpson quadrature over [0,1] with a fixed 2^17+1 node grid
// (the pinned oracle grid; fine enough for 1e-9 agreement on every
// density tested).  Kahan-compensated summation.
inline double simpson_unit(const std::function<double(double)>& f) {
    constexpr std::uint64_t kIntervals = 1u << 17;   // nodes = kIntervals + 1
    const double h = 1.0 / static_cast<double>(kIntervals);
    double sum = 0.0;
    double carry = 0.0;
    auto add = [&](double term) {
        const double y = term - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    };
    add(f(0.0));
    add(f(1.0));
    for (std::uint64_t i = 1; i < kIntervals; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(kIntervals);
        add((i % 2 == 1 ? 4.0 : 2.0) * f(x));
    }
    return sum * h / 3.0;
}

// Mean and standard deviation of the relative frequency k/m when
// k ~ Binomial(m, p), by full enumeration of the m+1 outcomes.
struct BinomialFrequencyMoments {
    double mean = 0.0;
    double sd = 0.0;
};

inline BinomialFrequencyMoments binomial_frequency_moments(double p, std::uint64_t m) {
    // weights[k] = C(m,k) p^k (1-p)^(m-k) built by the ratio recurrence.
    std::vector<double> weights(m + 1);
    double w = 1.0;
    for (std::uint64_t i = 0; i < m; ++i) {
        w *= 1.0 - p;
    }
    weights[0] = w;
    for (std::uint64_t k = 0; k + 1 <= m; ++k) {
        if (p == 1.0 || w == 0.0) {
            // Degenerate or underflowed start: recompute directly.
            break;
        }
        w *= static_cast<double>(m - k) / static_cast<double>(k + 1) * (p / (1.0 - p));
        weights[k + 1] = w;
    }
    if (p == 1.0) {
        for (auto& x : weights) {
            x = 0.0;
        }
        weights[m] = 1.0;
    }
    double mean = 0.0;
    for (std::uint64_t k = 0; k <= m; ++k) {
        mean += static_cast<double>(k) / static_cast<double>(m) * weights[k];
    }
    double var = 0.0;
    for (std::uint64_t k = 0; k <= m; ++k) {
        const double d = static_cast<double>(k) / static_cast<double>(m) - mean;
        var += d * d * weights[k];
    }
    return BinomialFrequencyMoments{mean, var > 0.0 ? std::sqrt(var) : 0.0};
}

} // namespace oracles
