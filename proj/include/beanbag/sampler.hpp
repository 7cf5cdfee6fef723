#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "beanbag/predictive.hpp"

// Seeded urn simulation: draw-with-replacement sequences from a known
// true proportion, fed through the predictive-odds pipeline.
//
// The generator is pinned so traces are reproducible bit-for-bit across
// platforms and reimplementations.  It is splitmix64 (Steele, Lea &
// Flood), defined by the recurrence on 64-bit unsigned state x:
//
//     x += 0x9E3779B97F4A7C15
//     z  = x
//     z  = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//     z  = (z ^ (z >> 27)) * 0x94D049BB133111EB
//     output = z ^ (z >> 31)
//
// A draw is White iff output / 2^64 < true_p, evaluated exactly in
// integer arithmetic (no floating-point rounding in the comparison).

namespace beanbag {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

struct RngSpec {
    std::uint64_t seed = 0;
    static constexpr std::string_view algorithm = "splitmix64";
};

// The documented draw rule: u/2^64 < true_p, exact.
bool uniform64_below(std::uint64_t u, double true_p);

// n independent draws, each White with probability true_p.
std::vector<Color> draw_sequence(double true_p, std::uint64_t n, RngSpec rng);

struct SimulationSummary {
    Counts counts;
    Odds final_odds;                   // (n_white+1)/(n_black+1)
    double final_jl = 0.0;
    Ratio predictive_white;
    Ratio predictive_black;
    double beta_mean = 0.0;
    double beta_sd = 0.0;
};

struct SimulationTrace {
    double true_p = 0.0;
    RngSpec rng;
    std::vector<Color> draws;          // empty when keep_trace is false
    std::vector<ReplayStep> steps;     // ditto
    SimulationSummary summary;
};

// Generates the draws and replays them through the predictive pipeline.
// With keep_trace off the run streams in O(1) memory, so n is bounded
// only by time.
SimulationTrace run_experiment(double true_p, std::uint64_t n, RngSpec rng,
                               bool keep_trace = true);

} // namespace beanbag
