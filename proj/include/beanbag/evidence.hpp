#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "beanbag/ratio.hpp"

// Odds/probability/JL conversions and the additive evidence ledger.
//
// JL ("judgement leaning") is the base-10 logarithm of odds; the JL
// contribution of a single observation (delta JL, the weight of
// evidence) is the base-10 logarithm of its Bayes factor.  Multiplying
// Bayes factors onto odds is therefore the same as adding weights of
// evidence onto a running JL total, which is what OddsLedger records.
//
// Everything here is immutable after construction; operations are pure
// functions returning new values, safe to share across threads.

namespace beanbag {

// Two likelihoods both zero: the observation carries no information
// about either hypothesis and the Bayes factor is undefined.
struct UndefinedEvidenceError : std::domain_error {
    using std::domain_error::domain_error;
};

// Every hypothesis in a space assigns zero probability to the data.
struct ImpossibleEvidenceError : std::domain_error {
    using std::domain_error::domain_error;
};

// A ledger received certain evidence for and against the same
// hypothesis (a +inf entry meeting a -inf total or vice versa).
struct InconsistentEvidenceError : std::domain_error {
    using std::domain_error::domain_error;
};

enum class Color : std::uint8_t { White, Black };

constexpr Color complement(Color c) {
    return c == Color::White ? Color::Black : Color::White;
}

std::string_view to_string(Color c);   // "White" / "Black"
char color_code(Color c);              // 'W' / 'B'

// Tally of observed draws; the sufficient statistic for every posterior
// and predictive quantity in the library.
struct Counts {
    std::uint64_t n_white = 0;
    std::uint64_t n_black = 0;

    std::uint64_t total() const { return n_white + n_black; }
    std::uint64_t of(Color c) const { return c == Color::White ? n_white : n_black; }

    // Copy with one more draw of the given color.
    Counts with(Color c) const {
        return c == Color::White ? Counts{n_white + 1, n_black}
                                 : Counts{n_white, n_black + 1};
    }

    friend bool operator==(const Counts&, const Counts&) = default;
};

// Odds are exact ratios of the probabilities of two exclusive
// hypotheses; 0 and +inf encode a ruled-out side.
using Odds = Ratio;

// log10(num/den); zero odds -> -inf, infinite odds -> +inf.
double jl_from_odds(const Odds& odds);

// num/(num+den); zero -> 0, infinite -> 1.
double prob_from_odds(const Odds& odds);

// Exact rational counterparts of the probability conversion.
// prob_ratio_from_odds(a/b) = a/(a+b); odds_from_prob inverts it
// (probability must lie in [0,1]; p = 1 yields infinite odds).
Ratio prob_ratio_from_odds(const Odds& odds);
Odds odds_from_prob(const Ratio& probability);

double delta_jl_from_factor(double bayes_factor);   // log10
double factor_from_delta_jl(double delta_jl);       // 10^x

// One piece of evidence: a Bayes factor together with its weight
// delta_jl = log10(bayes_factor).  Extended: factor 0 <-> -inf weight,
// factor +inf <-> +inf weight.
struct EvidenceEntry {
    std::string label;
    double bayes_factor = 1.0;
    double delta_jl = 0.0;

    static EvidenceEntry from_factor(std::string label, double bayes_factor);
    static EvidenceEntry from_delta_jl(std::string label, double delta_jl);
};

// Additive log-odds bookkeeping: current_jl = initial_jl + sum of the
// appended weights of evidence.  Once the total reaches +-inf it stays
// there under finite additions; appending the opposite infinity throws
// InconsistentEvidenceError.
//
// With retain_entries off the ledger keeps only the running total (and
// a count of absorbed entries), which bounds memory for long replays.
class OddsLedger {
public:
    explicit OddsLedger(double initial_jl = 0.0, bool retain_entries = true)
        : initial_jl_(initial_jl), current_jl_(initial_jl), retain_(retain_entries) {}

    double initial_jl() const { return initial_jl_; }
    double current_jl() const { return current_jl_; }
    const std::vector<EvidenceEntry>& entries() const { return entries_; }
    bool retains_entries() const { return retain_; }

    // Appended entries, whether or not they were stored.
    std::uint64_t entry_count() const { return folded_ + entries_.size(); }

    friend OddsLedger ledger_append(OddsLedger ledger, EvidenceEntry entry);

private:
    double initial_jl_ = 0.0;
    double current_jl_ = 0.0;
    std::vector<EvidenceEntry> entries_;
    bool retain_ = true;
    std::uint64_t folded_ = 0;
};

OddsLedger ledger_append(OddsLedger ledger, EvidenceEntry entry);

} // namespace beanbag
