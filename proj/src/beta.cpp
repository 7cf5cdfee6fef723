#include "beanbag/beta.hpp"

#include <cmath>
#include <stdexcept>

namespace beanbag {

namespace {

void check_unit_interval(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error(std::string(what) + ": p must lie in [0,1]");
    }
}

} // namespace

double density(const BetaPosterior& posterior, double p) {
    check_unit_interval(p, "density");
    const std::uint64_t nw = posterior.counts.n_white;
    const std::uint64_t nb = posterior.counts.n_black;
    if (p == 0.0 && nw > 0) {
        return 0.0;
    }
    if (p == 1.0 && nb > 0) {
        return 0.0;
    }
    const double n = static_cast<double>(nw) + static_cast<double>(nb);
    double log_f = std::lgamma(n + 2.0) -
                   std::lgamma(static_cast<double>(nw) + 1.0) -
                   std::lgamma(static_cast<double>(nb) + 1.0);
    if (nw > 0) {
        log_f += static_cast<double>(nw) * std::log(p);
    }
    if (nb > 0) {
        log_f += static_cast<double>(nb) * std::log1p(-p);
    }
    return std::exp(log_f);
}

double density_via_factorials(const Counts& counts, double p) {
    check_unit_interval(p, "density_via_factorials");
    const std::uint64_t n = counts.total();
    if (n > 20) {
        throw std::domain_error("density_via_factorials: only valid for total counts <= 20");
    }
    // (n+1)! / (n_white! n_black!) built as a product of exact integers.
    double coeff = 1.0;
    for (std::uint64_t i = 2; i <= n + 1; ++i) {
        coeff *= static_cast<double>(i);
    }
    for (std::uint64_t i = 2; i <= counts.n_white; ++i) {
        coeff /= static_cast<double>(i);
    }
    for (std::uint64_t i = 2; i <= counts.n_black; ++i) {
        coeff /= static_cast<double>(i);
    }
    return coeff * std::pow(p, static_cast<double>(counts.n_white)) *
           std::pow(1.0 - p, static_cast<double>(counts.n_black));
}

DensityCurve curve(const Counts& counts, std::size_t grid_points) {
    if (grid_points < 2) {
        throw std::invalid_argument("curve: need at least two grid points");
    }
    DensityCurve out;
    out.counts = counts;
    out.points.reserve(grid_points);
    const BetaPosterior posterior{counts};
    const double last = static_cast<double>(grid_points - 1);
    for (std::size_t i = 0; i < grid_points; ++i) {
        // i/(G-1) rather than i*step: the midpoint of an even grid must
        // land exactly on 0.5 and the endpoints exactly on 0 and 1.
        const double p = static_cast<double>(i) / last;
        out.points.push_back(CurvePoint{p, density(posterior, p)});
    }
    return out;
}

Ratio predictive_white(const Counts& counts) {
    return Ratio{counts.n_white + 1, counts.total() + 2};
}

Ratio predictive_black(const Counts& counts) {
    return Ratio{counts.n_black + 1, counts.total() + 2};
}

double mean(const Counts& counts) {
    return predictive_white(counts).value();
}

double sd(const Counts& counts) {
    const double m = mean(counts);
    return std::sqrt(m * (1.0 - m) / (static_cast<double>(counts.total()) + 3.0));
}

FrequencySpread frequency_spread(double p, std::uint64_t m) {
    check_unit_interval(p, "frequency_spread");
    if (m == 0) {
        throw std::invalid_argument("frequency_spread: m must be positive");
    }
    return FrequencySpread{p, std::sqrt(p * (1.0 - p) / static_cast<double>(m))};
}

} // namespace beanbag
