#include "beanbag/predictive.hpp"

#include <utility>

namespace beanbag {

PredictiveState initial_state(bool retain_trace) {
    return PredictiveState{Counts{}, Ratio::one(), OddsLedger{0.0, retain_trace}};
}

Ratio update_factor(Color color, const Counts& counts) {
    if (color == Color::White) {
        return Ratio{counts.n_white + 2, counts.n_white + 1};
    }
    return Ratio{counts.n_black + 1, counts.n_black + 2};
}

PredictiveState apply_observation(PredictiveState state, Color color) {
    const Ratio factor = update_factor(color, state.counts);
    std::string label;
    if (state.ledger.retains_entries()) {
        label = "draw " + std::to_string(state.counts.total() + 1) + ": " +
                std::string(to_string(color));
    }
    EvidenceEntry entry{std::move(label), factor.value(), jl_from_odds(factor)};

    state.counts = state.counts.with(color);
    state.odds_white_black *= factor;
    state.ledger = ledger_append(std::move(state.ledger), std::move(entry));
    return state;
}

ReplayResult replay(std::span<const Color> sequence, bool keep_trace) {
    ReplayResult result;
    result.state = initial_state(keep_trace);
    if (keep_trace) {
        result.steps.reserve(sequence.size());
    }
    for (const Color color : sequence) {
        const Ratio factor = update_factor(color, result.state.counts);
        result.state = apply_observation(std::move(result.state), color);
        if (keep_trace) {
            const Odds& odds = result.state.odds_white_black;
            result.steps.push_back(ReplayStep{
                result.state.counts.total(),
                color,
                factor,
                jl_from_odds(factor),
                odds,
                prob_ratio_from_odds(odds),
                prob_ratio_from_odds(odds.reciprocal()),
            });
        }
    }
    return result;
}

Ratio telescoped_factor(const Counts& counts) {
    return Ratio{counts.n_white + 1, counts.n_black + 1};
}

} // namespace beanbag
