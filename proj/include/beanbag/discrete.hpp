#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "beanbag/evidence.hpp"

// Inference over a finite set of candidate box compositions: per-draw
// likelihoods and Bayes factors, combined odds after (n_white, n_black)
// observations, posteriors over the hypothesis set, and the predictive
// probability of the next draw.

namespace beanbag {

// Candidate white-ball proportions with prior weights.  Immutable;
// copies share the underlying data, so passing spaces around is cheap
// even when the hypothesis grid is large.
class DiscreteHypothesisSpace {
public:
    // Requires >= 2 pairwise-distinct proportions in [0,1] and
    // non-negative prior weights of the same length with positive sum;
    // weights are normalized to sum to 1.
    static DiscreteHypothesisSpace make(std::vector<double> proportions,
                                        std::vector<double> prior_weights);
    static DiscreteHypothesisSpace uniform(std::vector<double> proportions);

    const std::vector<double>& proportions() const { return data_->p; }
    const std::vector<double>& prior_weights() const { return data_->prior; }
    std::size_t size() const { return data_->p.size(); }

    // ln p_i and ln (1-p_i), precomputed for the log-space path.
    const std::vector<double>& log_p() const { return data_->log_p; }
    const std::vector<double>& log_q() const { return data_->log_q; }

private:
    struct Data {
        std::vector<double> p;
        std::vector<double> prior;
        std::vector<double> log_p;
        std::vector<double> log_q;
    };
    explicit DiscreteHypothesisSpace(std::shared_ptr<const Data> data)
        : data_(std::move(data)) {}
    std::shared_ptr<const Data> data_;
};

struct DiscretePosterior {
    DiscreteHypothesisSpace space;
    std::vector<double> weights;   // sums to 1
};

// P(draw = color | proportion p): p for White, 1-p for Black.
// p outside [0,1] is rejected.
double likelihood(Color color, double p);

// likelihood(color, p1) / likelihood(color, p2).  Both zero throws
// UndefinedEvidenceError; a zero denominator alone gives +inf.
double single_bayes_factor(Color color, double p1, double p2);

// log10 of single_bayes_factor (so -inf when hypothesis 1 is ruled out).
double single_delta_jl(Color color, double p1, double p2);

// p1^nW (1-p1)^nB / (p2^nW (1-p2)^nB): the combined Bayes factor after
// counts, accumulated in log10 space once either count exceeds 50.
double combined_odds(const Counts& counts, double p1, double p2);

// weights_i proportional to prior_i * p_i^nW (1-p_i)^nB.  Throws
// ImpossibleEvidenceError when every hypothesis has zero weight.
DiscretePosterior posterior(const Counts& counts, const DiscreteHypothesisSpace& space);

// Probability the next draw is White: sum_i p_i * posterior_i.
double predictive_white(const Counts& counts, const DiscreteHypothesisSpace& space);

} // namespace beanbag
