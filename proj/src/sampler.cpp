#include "beanbag/sampler.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "beanbag/beta.hpp"

namespace beanbag {

bool uniform64_below(std::uint64_t u, double true_p) {
    if (!(true_p >= 0.0 && true_p <= 1.0)) {
        throw std::domain_error("uniform64_below: true_p must lie in [0,1]");
    }
    if (true_p <= 0.0) {
        return false;
    }
    if (true_p >= 1.0) {
        return true;
    }
    // u < p * 2^64.  ldexp only shifts the exponent, so t is the exact
    // real value of p * 2^64 (< 2^64, hence finite).
    const double t = std::ldexp(true_p, 64);
    const double floor_t = std::floor(t);
    const auto threshold = static_cast<std::uint64_t>(floor_t);
    // If t is fractional, u < t is equivalent to u <= floor(t).
    return t == floor_t ? u < threshold : u <= threshold;
}

std::vector<Color> draw_sequence(double true_p, std::uint64_t n, RngSpec rng) {
    if (!(true_p >= 0.0 && true_p <= 1.0)) {
        throw std::domain_error("draw_sequence: true_p must lie in [0,1]");
    }
    SplitMix64 gen{rng.seed};
    std::vector<Color> draws;
    draws.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        draws.push_back(uniform64_below(gen.next(), true_p) ? Color::White : Color::Black);
    }
    return draws;
}

SimulationTrace run_experiment(double true_p, std::uint64_t n, RngSpec rng,
                               bool keep_trace) {
    if (!(true_p >= 0.0 && true_p <= 1.0)) {
        throw std::domain_error("run_experiment: true_p must lie in [0,1]");
    }
    SimulationTrace trace;
    trace.true_p = true_p;
    trace.rng = rng;

    SplitMix64 gen{rng.seed};
    PredictiveState state = initial_state(keep_trace);
    if (keep_trace) {
        trace.draws.reserve(n);
        trace.steps.reserve(n);
    }
    for (std::uint64_t i = 0; i < n; ++i) {
        const Color color =
            uniform64_below(gen.next(), true_p) ? Color::White : Color::Black;
        const Ratio factor = update_factor(color, state.counts);
        state = apply_observation(std::move(state), color);
        if (keep_trace) {
            trace.draws.push_back(color);
            const Odds& odds = state.odds_white_black;
            trace.steps.push_back(ReplayStep{
                state.counts.total(),
                color,
                factor,
                jl_from_odds(factor),
                odds,
                prob_ratio_from_odds(odds),
                prob_ratio_from_odds(odds.reciprocal()),
            });
        }
    }

    trace.summary = SimulationSummary{
        state.counts,
        state.odds_white_black,
        state.ledger.current_jl(),
        predictive_white(state.counts),
        predictive_black(state.counts),
        mean(state.counts),
        sd(state.counts),
    };
    return trace;
}

} // namespace beanbag
