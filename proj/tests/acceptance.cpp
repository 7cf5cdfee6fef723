// Acceptance suite: runs every contract criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion.  Exits nonzero
// if any criterion fails.  Criteria 8 and 10 drive the installed CLI
// binary (path injected at build time) end to end.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "beanbag/beta.hpp"
#include "beanbag/discrete.hpp"
#include "beanbag/predictive.hpp"
#include "beanbag/sampler.hpp"
#include "oracles.hpp"

using namespace beanbag;

namespace {

struct Check {
    int failures = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            if (first_failure.empty()) {
                first_failure = what;
            }
        }
    }
};

struct CommandResult {
    int status = -1;
    std::string out;
};

CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (pipe == nullptr) {
        return result;
    }
    char buffer[65536];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.out.append(buffer, n);
    }
    result.status = pclose(pipe);
    return result;
}

std::string cli_binary() {
    return std::string("'") + BEANBAG_CLI_BINARY + "'";
}

bool close(double a, double b, double tol) {
    return std::fabs(a - b) <= tol;
}

std::vector<Color> repeated(Color c, std::size_t n) {
    return std::vector<Color>(n, c);
}

// ----------------------------------------------------------------- criteria

void criterion_twenty_black(Check& c) {
    const auto result = replay(repeated(Color::Black, 20));
    c.expect(result.state.odds_white_black == Ratio{1, 21}, "final odds != 1/21");
    c.expect(close(result.state.ledger.current_jl(), -1.322, 1e-3), "JL != -1.322 +- 0.001");
    c.expect(predictive_black(result.state.counts) == Ratio{21, 22}, "P(black) != 21/22");
    c.expect(close(predictive_black(result.state.counts).value(), 0.9545, 1e-4),
             "P(black) decimal != 0.9545 +- 0.0001");
}

void criterion_twenty_first_white(Check& c) {
    const auto twenty = replay(repeated(Color::Black, 20));
    const Ratio factor = update_factor(Color::White, twenty.state.counts);
    c.expect(factor == Ratio{2, 1}, "factor != 2");
    const auto after = apply_observation(twenty.state, Color::White);
    c.expect(after.odds_white_black == Ratio{2, 21}, "odds != 2/21");
    c.expect(predictive_white(after.counts) == Ratio{2, 23}, "P(white) != 2/23");
    c.expect(close(predictive_white(after.counts).value(), 0.0870, 1e-4),
             "P(white) decimal != 0.0870 +- 0.0001");
}

void criterion_per_step_factors(Check& c) {
    const auto result = replay(repeated(Color::Black, 20));
    const Ratio expected_factors[4] = {{1, 2}, {2, 3}, {3, 4}, {4, 5}};
    const double expected_jl[3] = {-0.301, -0.176, -0.125};
    for (int i = 0; i < 4; ++i) {
        c.expect(result.steps[i].factor == expected_factors[i],
                 "factor " + std::to_string(i + 1) + " not exact");
    }
    for (int i = 0; i < 3; ++i) {
        c.expect(close(result.steps[i].delta_jl, expected_jl[i], 1e-3),
                 "delta JL " + std::to_string(i + 1) + " out of tolerance");
    }
    c.expect(result.steps[19].factor == Ratio{20, 21}, "20th factor != 20/21");
    c.expect(close(result.steps[19].delta_jl, -0.021, 1e-3), "20th delta JL != -0.021");
}

void criterion_large_sample(Check& c) {
    const Counts big{990, 1010};
    c.expect(telescoped_factor(big) == Ratio{991, 1011}, "telescoped factor != 991/1011");
    c.expect(close(jl_from_odds(telescoped_factor(big)), -0.0087, 2e-4),
             "residual delta JL != -0.0087 +- 0.0002");

    // 990 white then 1010 black: the last 20 steps are the surviving
    // black arguments.
    std::vector<Color> seq = repeated(Color::White, 990);
    const auto blacks = repeated(Color::Black, 1010);
    seq.insert(seq.end(), blacks.begin(), blacks.end());
    const auto result = replay(seq);
    c.expect(result.state.odds_white_black == Ratio{991, 1011}, "replay odds != 991/1011");
    for (std::size_t i = 1980; i < 2000; ++i) {
        c.expect(std::fabs(result.steps[i].delta_jl) < 5e-4,
                 "late step " + std::to_string(i + 1) + " weighs >= 5e-4");
    }
    c.expect(predictive_black(big) == Ratio{1011, 2002}, "P(black) != 1011/2002");

    // Independent quadrature oracle for the predictive probability.
    const BetaPosterior post{big};
    const double quad_mean =
        oracles::simpson_unit([&](double p) { return p * density(post, p); });
    c.expect(close(quad_mean, 991.0 / 2002.0, 1e-9), "quadrature mean != 991/2002 +- 1e-9");
    c.expect(close(1.0 - quad_mean, 1011.0 / 2002.0, 1e-9),
             "quadrature P(black) != 1011/2002 +- 1e-9");
}

void criterion_balancing_reasons(Check& c) {
    const auto twenty = replay(repeated(Color::Black, 20), false);
    std::vector<Color> seq = repeated(Color::Black, 1010);
    const auto whites = repeated(Color::White, 990);
    seq.insert(seq.end(), whites.begin(), whites.end());
    std::shuffle(seq.begin(), seq.end(), std::mt19937_64{4242});
    const auto big = replay(seq, false);
    c.expect(twenty.state.odds_white_black == Ratio{1, 21}, "20-black odds != 1/21");
    c.expect(big.state.odds_white_black == Ratio{991, 1011}, "2000-draw odds != 991/1011");
    c.expect(twenty.state.odds_white_black != big.state.odds_white_black,
             "equal-count-difference beliefs must differ");

    // Symmetric fixed compositions: shift invariance of the combined odds.
    std::mt19937_64 gen{31337};
    std::uniform_real_distribution<double> dist{0.05, 0.95};
    for (int rep = 0; rep < 200; ++rep) {
        const double p1 = dist(gen);
        const std::uint64_t a = gen() % 101;
        const std::uint64_t b = gen() % 101;
        const std::uint64_t k = gen() % 201;
        const double base = combined_odds(Counts{a, b}, p1, 1.0 - p1);
        const double shifted = combined_odds(Counts{a + k, b + k}, p1, 1.0 - p1);
        c.expect(std::fabs(shifted - base) <= 1e-9 * std::fabs(base),
                 "shift invariance violated beyond 1e-9 relative");
    }
}

void criterion_order_invariance(Check& c) {
    std::mt19937_64 gen{90210};
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t n = 1 + gen() % 400;
        std::vector<Color> seq(n);
        for (auto& color : seq) {
            color = gen() % 2 == 0 ? Color::White : Color::Black;
        }
        const auto base = replay(seq, false);
        for (int perm = 0; perm < 20; ++perm) {
            std::shuffle(seq.begin(), seq.end(), gen);
            const auto shuffled = replay(seq, false);
            c.expect(shuffled.state.odds_white_black == base.state.odds_white_black,
                     "permutation changed the final odds");
            c.expect(shuffled.state.counts == base.state.counts,
                     "permutation changed the counts");
        }
    }
}

void criterion_beta_moments(Check& c) {
    const Counts cases[] = {{0, 0}, {1, 1}, {10, 10}, {25, 25}, {990, 1010}, {2000, 2000}};
    for (const Counts& counts : cases) {
        const BetaPosterior post{counts};
        const std::string tag =
            "(" + std::to_string(counts.n_white) + "," + std::to_string(counts.n_black) + ")";
        const double mass = oracles::simpson_unit([&](double p) { return density(post, p); });
        c.expect(close(mass, 1.0, 1e-9), "normalization off for " + tag);
        const double quad_mean =
            oracles::simpson_unit([&](double p) { return p * density(post, p); });
        c.expect(close(quad_mean, mean(counts), 1e-9), "mean off for " + tag);
        if (counts.n_white <= 200 && counts.n_black <= 200) {
            const double quad_m2 =
                oracles::simpson_unit([&](double p) { return p * p * density(post, p); });
            const double quad_sd = std::sqrt(quad_m2 - quad_mean * quad_mean);
            c.expect(close(quad_sd, sd(counts), 1e-9), "sd off for " + tag);
        }
    }
}

void criterion_figure_curves(Check& c) {
    const auto result = run_command(cli_binary() + " curve");
    c.expect(result.status == 0, "curve command failed");

    struct ParsedCurve {
        Counts counts;
        std::vector<double> p;
        std::vector<double> density;
    };
    std::vector<ParsedCurve> curves;
    std::istringstream lines(result.out);
    std::string line;
    std::getline(lines, line);
    c.expect(line == "n_white,n_black,p,density", "unexpected CSV header: " + line);
    while (std::getline(lines, line)) {
        std::istringstream cells(line);
        std::string cell;
        std::getline(cells, cell, ',');
        const std::uint64_t nw = std::stoull(cell);
        std::getline(cells, cell, ',');
        const std::uint64_t nb = std::stoull(cell);
        std::getline(cells, cell, ',');
        const double p = std::stod(cell);
        std::getline(cells, cell, ',');
        const double d = std::stod(cell);
        if (curves.empty() || !(curves.back().counts == Counts{nw, nb})) {
            curves.push_back(ParsedCurve{Counts{nw, nb}, {}, {}});
        }
        curves.back().p.push_back(p);
        curves.back().density.push_back(d);
    }

    const Counts expected[] = {{1, 1}, {2, 2}, {5, 5}, {10, 10}, {25, 25}, {50, 50}};
    c.expect(curves.size() == 6, "expected six curves");
    double previous_peak = 0.0;
    for (std::size_t i = 0; i < curves.size() && i < 6; ++i) {
        const auto& curve = curves[i];
        c.expect(curve.counts == expected[i], "unexpected curve counts");
        c.expect(curve.p.size() == 1001, "expected the default 1001-point grid");
        const auto argmax = static_cast<std::size_t>(
            std::max_element(curve.density.begin(), curve.density.end()) -
            curve.density.begin());
        c.expect(std::fabs(curve.p[argmax] - 0.5) <= 1.0 / 1000.0 + 1e-12,
                 "curve argmax further than one grid step from 0.5");
        const auto mid = std::find(curve.p.begin(), curve.p.end(), 0.5);
        c.expect(mid != curve.p.end(), "no exact p = 0.5 grid point");
        if (mid != curve.p.end()) {
            const double at_half =
                curve.density[static_cast<std::size_t>(mid - curve.p.begin())];
            c.expect(at_half > previous_peak, "density(0.5) not strictly increasing with n");
            previous_peak = at_half;
        }
    }
}

void criterion_grid_convergence(Check& c) {
    const std::size_t k = 10000;
    std::vector<double> grid(k);
    for (std::size_t i = 0; i < k; ++i) {
        grid[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(k);
    }
    const auto space = DiscreteHypothesisSpace::uniform(std::move(grid));
    double worst = 0.0;
    for (std::uint64_t total = 0; total <= 200; ++total) {
        for (std::uint64_t nw = 0; nw <= total; ++nw) {
            const Counts counts{nw, total - nw};
            const double discrete = predictive_white(counts, space);
            const double continuous = mean(counts);
            worst = std::max(worst, std::fabs(discrete - continuous));
        }
    }
    c.expect(worst <= 1e-6,
             "worst |discrete - Laplace| = " + std::to_string(worst) + " > 1e-6");
}

void criterion_determinism(Check& c) {
    const std::string command = cli_binary() +
                                " simulate --true-p 0.37 --n 2000 --seed 20250810 --trace";
    const auto first = run_command(command);
    const auto second = run_command(command);
    c.expect(first.status == 0, "simulate command failed");
    c.expect(!first.out.empty(), "simulate produced no output");
    c.expect(first.out == second.out, "same seed produced different bytes");

    const auto whites = draw_sequence(1.0, 1000, RngSpec{77});
    c.expect(std::all_of(whites.begin(), whites.end(),
                         [](Color color) { return color == Color::White; }),
             "draw_sequence(1.0) produced a black draw");
    const auto blacks = draw_sequence(0.0, 1000, RngSpec{77});
    c.expect(std::all_of(blacks.begin(), blacks.end(),
                         [](Color color) { return color == Color::Black; }),
             "draw_sequence(0.0) produced a white draw");
}

} // namespace

int main() {
    struct Criterion {
        std::string name;
        std::function<void(Check&)> body;
    };
    const std::vector<Criterion> criteria = {
        {"twenty-black scenario: odds 1/21, JL -1.322, P(black)=21/22", criterion_twenty_black},
        {"twenty-first white: factor 2, odds 2/21, P(white)=2/23", criterion_twenty_first_white},
        {"per-step factors 1/2..4/5 and 20/21 with pinned weights", criterion_per_step_factors},
        {"large sample: 991/1011, residual -0.0087, P(black)=1011/2002", criterion_large_sample},
        {"balancing reasons fails predictively, holds symmetrically", criterion_balancing_reasons},
        {"order invariance of replay over random permutations", criterion_order_invariance},
        {"beta normalization and moments against quadrature", criterion_beta_moments},
        {"default curve output: six narrowing densities around 0.5", criterion_figure_curves},
        {"10^4-point hypothesis grid converges to the Laplace predictive", criterion_grid_convergence},
        {"seeded simulation determinism and degenerate urns", criterion_determinism},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        try {
            criteria[i].body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const bool ok = check.failures == 0;
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": "
                  << criteria[i].name;
        if (!ok) {
            std::cout << "  [" << check.failures << " failed; first: "
                      << check.first_failure << "]";
        }
        std::cout << "\n";
    }
    std::cout << (failed == 0 ? "all criteria passed" : "criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
