#pragma once

#include <span>
#include <vector>

#include "beanbag/evidence.hpp"

// Predictive white:black odds under a uniform prior over the proportion.
// By the rule of succession the odds after (n_white, n_black) draws are
// exactly (n_white+1)/(n_black+1), so the Bayes factor contributed by
// one more draw is
//
//     White: (n_white+2)/(n_white+1)     Black: (n_black+1)/(n_black+2)
//
// Unlike the fixed-composition factors, these depend on how many
// like-color draws have already been seen: early draws of a color carry
// large weights of evidence, late ones nearly none.  That state
// dependence is exactly why a belief about the next draw is not a
// fixed-weight sum of pro and con arguments, even though the final odds
// are order-invariant.
//
// The factors above assume the uniform prior; there is deliberately no
// entry point that takes a different prior over the proportion.

namespace beanbag {

// Exact odds plus the JL ledger that mirrors them additively.
struct PredictiveState {
    Counts counts;
    Odds odds_white_black = Ratio::one();   // always (n_white+1)/(n_black+1)
    OddsLedger ledger;
};

// Even odds, empty counts, empty ledger at JL 0.  With retain_trace off
// the ledger keeps only its running JL total (for very long replays).
PredictiveState initial_state(bool retain_trace = true);

// Bayes factor of observing `color` next, given the draws so far.
Ratio update_factor(Color color, const Counts& counts);

// Increments the counts, multiplies the odds by the matching update
// factor and appends the corresponding weight of evidence to the ledger.
PredictiveState apply_observation(PredictiveState state, Color color);

struct ReplayStep {
    std::uint64_t index = 0;           // 1-based draw number
    Color color = Color::White;
    Ratio factor;                      // Bayes factor of this draw
    double delta_jl = 0.0;             // log10(factor)
    Odds odds;                         // odds after this draw
    Ratio predictive_white;            // P(next is White), exact
    Ratio predictive_black;            // P(next is Black), exact
};

struct ReplayResult {
    PredictiveState state;
    std::vector<ReplayStep> steps;     // empty when keep_trace is false
};

// Folds apply_observation over the sequence.
ReplayResult replay(std::span<const Color> sequence, bool keep_trace = true);

// Closed form of the product of all per-draw factors from even initial
// odds: like-color factor pairs telescope, leaving (n_white+1)/(n_black+1).
Ratio telescoped_factor(const Counts& counts);

} // namespace beanbag
