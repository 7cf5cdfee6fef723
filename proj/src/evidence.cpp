#include "beanbag/evidence.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace beanbag {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::string_view to_string(Color c) {
    return c == Color::White ? "White" : "Black";
}

char color_code(Color c) {
    return c == Color::White ? 'W' : 'B';
}

double jl_from_odds(const Odds& odds) {
    if (odds.is_zero()) {
        return -kInf;
    }
    if (odds.is_infinite()) {
        return kInf;
    }
    return std::log10(static_cast<double>(odds.numerator()) /
                      static_cast<double>(odds.denominator()));
}

double prob_from_odds(const Odds& odds) {
    if (odds.is_zero()) {
        return 0.0;
    }
    if (odds.is_infinite()) {
        return 1.0;
    }
    const double n = static_cast<double>(odds.numerator());
    const double d = static_cast<double>(odds.denominator());
    return n / (n + d);
}

Ratio prob_ratio_from_odds(const Odds& odds) {
    if (odds.is_infinite()) {
        return Ratio::one();
    }
    // gcd(a, a+b) = gcd(a, b) = 1, so the result is already reduced.
    return Ratio{odds.numerator(), odds.numerator() + odds.denominator()};
}

Odds odds_from_prob(const Ratio& probability) {
    if (probability.is_infinite() || Ratio::one() < probability) {
        throw std::domain_error("odds_from_prob: probability must lie in [0,1]");
    }
    return Odds{probability.numerator(),
                probability.denominator() - probability.numerator()};
}

double delta_jl_from_factor(double bayes_factor) {
    return std::log10(bayes_factor);
}

double factor_from_delta_jl(double delta_jl) {
    return std::pow(10.0, delta_jl);
}

EvidenceEntry EvidenceEntry::from_factor(std::string label, double bayes_factor) {
    if (std::isnan(bayes_factor) || bayes_factor < 0.0) {
        throw std::invalid_argument("EvidenceEntry: Bayes factor must be non-negative");
    }
    return EvidenceEntry{std::move(label), bayes_factor, delta_jl_from_factor(bayes_factor)};
}

EvidenceEntry EvidenceEntry::from_delta_jl(std::string label, double delta_jl) {
    if (std::isnan(delta_jl)) {
        throw std::invalid_argument("EvidenceEntry: delta JL must not be NaN");
    }
    return EvidenceEntry{std::move(label), factor_from_delta_jl(delta_jl), delta_jl};
}

OddsLedger ledger_append(OddsLedger ledger, EvidenceEntry entry) {
    const double cur = ledger.current_jl_;
    if ((cur == kInf && entry.delta_jl == -kInf) ||
        (cur == -kInf && entry.delta_jl == kInf)) {
        throw InconsistentEvidenceError(
            "OddsLedger: certain evidence both for and against (" + entry.label + ")");
    }
    if (std::isinf(cur)) {
        // Saturated: stays at +-inf under finite additions.
        ledger.current_jl_ = cur;
    } else {
        ledger.current_jl_ = cur + entry.delta_jl;
    }
    if (ledger.retain_) {
        ledger.entries_.push_back(std::move(entry));
    } else {
        ++ledger.folded_;
    }
    return ledger;
}

} // namespace beanbag
