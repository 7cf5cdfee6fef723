#pragma once

#include <cstdint>
#include <vector>

#include "beanbag/evidence.hpp"

// The infinite-composition limit: with a uniform prior over the white
// proportion p, the posterior after (n_white, n_black) draws has density
//
//     f(p) = (n+1)! / (n_white! n_black!) * p^n_white * (1-p)^n_black
//
// and the probability that the next draw is white is the rule of
// succession (n_white+1)/(n+2), which is also E[p].

namespace beanbag {

// Uniform-prior posterior over the proportion; fully determined by the
// observed counts.
struct BetaPosterior {
    Counts counts;
};

struct CurvePoint {
    double p = 0.0;
    double density = 0.0;
};

// Density sampled on a uniform grid over [0,1], endpoints included.
struct DensityCurve {
    Counts counts;
    std::vector<CurvePoint> points;
};

// f(p) evaluated via log-gamma (counts in the thousands would overflow
// factorials).  Endpoint convention 0^0 = 1, so no data gives the
// uniform density.  p outside [0,1] is rejected.
double density(const BetaPosterior& posterior, double p);

// Reference path for total counts <= 20: plain factorial arithmetic,
// used to cross-check the log-gamma evaluation.
double density_via_factorials(const Counts& counts, double p);

// Evaluates density on grid_points (>= 2) equally spaced points.
DensityCurve curve(const Counts& counts, std::size_t grid_points);

// Rule of succession, exact: (n_white+1)/(n+2) and (n_black+1)/(n+2).
// The two always sum to 1.
Ratio predictive_white(const Counts& counts);
Ratio predictive_black(const Counts& counts);

// E[p] under the posterior; equal to predictive_white as a real.
double mean(const Counts& counts);

// Standard deviation of p: sqrt(E[p](1-E[p]) / (n+3)).
double sd(const Counts& counts);

// Relative frequency of white expected in m future draws when the
// proportion p is known exactly: mean p, spread sqrt(p(1-p)/m).
struct FrequencySpread {
    double mean = 0.0;
    double sd = 0.0;
};

FrequencySpread frequency_spread(double p, std::uint64_t m);

} // namespace beanbag
