#include "beanbag/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace beanbag {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Either count above this switches the combined quantities from direct
// products to log-space accumulation (0.25^990 underflows a double).
constexpr std::uint64_t kLogSpaceThreshold = 50;

void check_proportion(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error(std::string(what) + ": proportion must lie in [0,1]");
    }
}

// n * log(x) with the 0 * log(0) = 0 endpoint convention.
double count_times_log(std::uint64_t n, double log_x) {
    return n == 0 ? 0.0 : static_cast<double>(n) * log_x;
}

} // namespace

DiscreteHypothesisSpace DiscreteHypothesisSpace::make(std::vector<double> proportions,
                                                      std::vector<double> prior_weights) {
    if (proportions.size() < 2) {
        throw std::invalid_argument("DiscreteHypothesisSpace: need at least two hypotheses");
    }
    if (prior_weights.size() != proportions.size()) {
        throw std::invalid_argument("DiscreteHypothesisSpace: weights/proportions length mismatch");
    }
    for (double p : proportions) {
        check_proportion(p, "DiscreteHypothesisSpace");
    }
    std::vector<double> sorted = proportions;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("DiscreteHypothesisSpace: proportions must be pairwise distinct");
    }
    double sum = 0.0;
    for (double w : prior_weights) {
        if (!(w >= 0.0) || std::isinf(w)) {
            throw std::invalid_argument("DiscreteHypothesisSpace: prior weights must be finite and >= 0");
        }
        sum += w;
    }
    if (!(sum > 0.0)) {
        throw std::invalid_argument("DiscreteHypothesisSpace: prior weights must not all be zero");
    }

    auto data = std::make_shared<Data>();
    data->p = std::move(proportions);
    data->prior = std::move(prior_weights);
    for (double& w : data->prior) {
        w /= sum;
    }
    data->log_p.reserve(data->p.size());
    data->log_q.reserve(data->p.size());
    for (double p : data->p) {
        data->log_p.push_back(std::log(p));     // -inf at p = 0
        data->log_q.push_back(std::log1p(-p));  // -inf at p = 1
    }
    return DiscreteHypothesisSpace{std::move(data)};
}

DiscreteHypothesisSpace DiscreteHypothesisSpace::uniform(std::vector<double> proportions) {
    std::vector<double> weights(proportions.size(), 1.0);
    return make(std::move(proportions), std::move(weights));
}

double likelihood(Color color, double p) {
    check_proportion(p, "likelihood");
    return color == Color::White ? p : 1.0 - p;
}

double single_bayes_factor(Color color, double p1, double p2) {
    const double l1 = likelihood(color, p1);
    const double l2 = likelihood(color, p2);
    if (l1 == 0.0 && l2 == 0.0) {
        throw UndefinedEvidenceError("single_bayes_factor: both likelihoods are zero");
    }
    if (l2 == 0.0) {
        return kInf;
    }
    return l1 / l2;
}

double single_delta_jl(Color color, double p1, double p2) {
    return std::log10(single_bayes_factor(color, p1, p2));
}

double combined_odds(const Counts& counts, double p1, double p2) {
    check_proportion(p1, "combined_odds");
    check_proportion(p2, "combined_odds");
    const std::uint64_t nw = counts.n_white;
    const std::uint64_t nb = counts.n_black;

    const bool num_zero = (p1 == 0.0 && nw > 0) || (p1 == 1.0 && nb > 0);
    const bool den_zero = (p2 == 0.0 && nw > 0) || (p2 == 1.0 && nb > 0);
    if (num_zero && den_zero) {
        throw UndefinedEvidenceError("combined_odds: evidence rules out both hypotheses");
    }
    if (num_zero) {
        return 0.0;
    }
    if (den_zero) {
        return kInf;
    }

    if (nw > kLogSpaceThreshold || nb > kLogSpaceThreshold) {
        // 10^(nW * dJL(White) + nB * dJL(Black)); zero-count terms are
        // skipped so a ruled-out color with no observations contributes
        // nothing.
        double exponent = 0.0;
        if (nw > 0) {
            exponent += static_cast<double>(nw) * std::log10(p1 / p2);
        }
        if (nb > 0) {
            exponent += static_cast<double>(nb) * std::log10((1.0 - p1) / (1.0 - p2));
        }
        return std::pow(10.0, exponent);
    }
    const double num = std::pow(p1, static_cast<double>(nw)) *
                       std::pow(1.0 - p1, static_cast<double>(nb));
    const double den = std::pow(p2, static_cast<double>(nw)) *
                       std::pow(1.0 - p2, static_cast<double>(nb));
    return num / den;
}

DiscretePosterior posterior(const Counts& counts, const DiscreteHypothesisSpace& space) {
    const std::size_t k = space.size();
    const std::uint64_t nw = counts.n_white;
    const std::uint64_t nb = counts.n_black;
    std::vector<double> weights(k);

    if (nw > kLogSpaceThreshold || nb > kLogSpaceThreshold) {
        const auto& lp = space.log_p();
        const auto& lq = space.log_q();
        double max_t = -kInf;
        for (std::size_t i = 0; i < k; ++i) {
            const double prior = space.prior_weights()[i];
            double t;
            if (prior == 0.0) {
                t = -kInf;
            } else {
                t = std::log(prior) + count_times_log(nw, lp[i]) + count_times_log(nb, lq[i]);
            }
            weights[i] = t;
            max_t = std::max(max_t, t);
        }
        if (max_t == -kInf) {
            throw ImpossibleEvidenceError("posterior: all hypotheses have zero weight");
        }
        double sum = 0.0;
        for (double& w : weights) {
            w = w == -kInf ? 0.0 : std::exp(w - max_t);
            sum += w;
        }
        for (double& w : weights) {
            w /= sum;
        }
    } else {
        double sum = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            const double p = space.proportions()[i];
            // pow(0,0) = 1, matching the no-data case.
            weights[i] = space.prior_weights()[i] *
                         std::pow(p, static_cast<double>(nw)) *
                         std::pow(1.0 - p, static_cast<double>(nb));
            sum += weights[i];
        }
        if (!(sum > 0.0)) {
            throw ImpossibleEvidenceError("posterior: all hypotheses have zero weight");
        }
        for (double& w : weights) {
            w /= sum;
        }
    }
    return DiscretePosterior{space, std::move(weights)};
}

double predictive_white(const Counts& counts, const DiscreteHypothesisSpace& space) {
    const DiscretePosterior post = posterior(counts, space);
    double acc = 0.0;
    for (std::size_t i = 0; i < space.size(); ++i) {
        acc += space.proportions()[i] * post.weights[i];
    }
    return acc;
}

} // namespace beanbag
