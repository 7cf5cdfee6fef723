#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "beanbag/beta.hpp"
#include "beanbag/discrete.hpp"
#include "beanbag/predictive.hpp"
#include "beanbag/sampler.hpp"

namespace beanbag::cli {

namespace {

using nlohmann::ordered_json;

// Shortest round-trip decimal form, used in CSV cells.
std::string format_full(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, result.ptr);
}

// Four significant digits with trailing zeros kept, for the reports.
std::string format_sig4(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%#.4g", x);
    return buf;
}

// "991/1011 = 0.9802"
std::string fraction_and_decimal(const Ratio& r) {
    return r.to_string() + " = " + format_sig4(r.value());
}

// "21/22 = 0.9545 (95.45%)"
std::string probability_line(const Ratio& p) {
    return fraction_and_decimal(p) + " (" + format_sig4(100.0 * p.value()) + "%)";
}

void write_output(const std::string& path, const std::string& content,
                  std::ostream& out) {
    if (path == "-") {
        out << content;
        out.flush();
        return;
    }
    // Write the whole file to a sibling temp name first so a failed run
    // never leaves a partial output behind.
    const std::string tmp = path + ".tmp";
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw std::runtime_error("cannot open '" + tmp + "' for writing");
        }
        file << content;
        file.flush();
        if (!file) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("failed while writing '" + tmp + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::runtime_error("cannot move output into place at '" + path + "'");
    }
}

Counts parse_counts_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw CLI::ValidationError("--counts", "expected 'N_WHITE,N_BLACK', got '" + text + "'");
    }
    Counts counts;
    const auto parse_part = [&](std::string_view part, std::uint64_t& value) {
        const char* begin = part.data();
        const char* end = begin + part.size();
        const auto [ptr, errc] = std::from_chars(begin, end, value);
        if (errc != std::errc{} || ptr != end) {
            throw CLI::ValidationError("--counts",
                                       "expected a non-negative integer, got '" +
                                           std::string(part) + "'");
        }
    };
    parse_part(std::string_view(text).substr(0, comma), counts.n_white);
    parse_part(std::string_view(text).substr(comma + 1), counts.n_black);
    return counts;
}

ordered_json meta_block(const std::string& command, ordered_json arguments,
                        const std::uint64_t* seed) {
    ordered_json meta;
    meta["command"] = command;
    meta["version"] = std::string(kVersion);
    if (seed != nullptr) {
        meta["seed"] = *seed;
    } else {
        meta["seed"] = nullptr;
    }
    meta["arguments"] = std::move(arguments);
    return meta;
}

// ---------------------------------------------------------------- peirce

void append_step_row(std::string& text, const ReplayStep& step, double running_jl) {
    char line[160];
    std::snprintf(line, sizeof(line), "  %4llu   %c    %10s = %-7s  %+8.4f  %+9.4f   %s\n",
                  static_cast<unsigned long long>(step.index), color_code(step.color),
                  step.factor.to_string().c_str(), format_sig4(step.factor.value()).c_str(),
                  step.delta_jl, running_jl,
                  fraction_and_decimal(step.odds).c_str());
    text += line;
}

std::string render_peirce() {
    std::string text;
    text += "A large bag of beans: the same 20-draw excess of black, two ways\n";
    text += "================================================================\n\n";
    text += "Uniform prior over the white-bean proportion p.  The predictive odds\n";
    text += "for white against black after n_W white and n_B black draws are\n";
    text += "exactly (n_W+1)/(n_B+1) (rule of succession), so each draw multiplies\n";
    text += "the odds by a factor that depends on the like-color draws before it.\n";
    text += "JL = log10(odds); delta JL = log10(factor) is the weight of evidence.\n\n";

    text += "Scenario A: twenty consecutive black draws\n";
    text += "------------------------------------------\n";
    text += "  draw color        factor            delta JL        JL   odds (W:B)\n";
    const auto twenty = replay(std::vector<Color>(20, Color::Black));
    double running_jl = 0.0;
    for (const auto& step : twenty.steps) {
        running_jl += step.delta_jl;
        append_step_row(text, step, running_jl);
    }
    const auto& state_a = twenty.state;
    text += "\n";
    text += "  overall factor and final odds (W:B): " +
            fraction_and_decimal(state_a.odds_white_black) +
            ", JL = " + format_sig4(state_a.ledger.current_jl()) + "\n";
    text += "  P(white next) = " + probability_line(predictive_white(state_a.counts)) + "\n";
    text += "  P(black next) = " + probability_line(predictive_black(state_a.counts)) + "\n\n";

    const auto after_white = apply_observation(state_a, Color::White);
    const auto white_factor = update_factor(Color::White, state_a.counts);
    text += "A 21st draw comes up white\n";
    text += "--------------------------\n";
    text += "  factor: " + fraction_and_decimal(white_factor) +
            ", delta JL = " + format_sig4(jl_from_odds(white_factor)) + "\n";
    text += "  odds (W:B): " + fraction_and_decimal(after_white.odds_white_black) +
            ", JL = " + format_sig4(after_white.ledger.current_jl()) + "\n";
    text += "  P(white next) = " + probability_line(predictive_white(after_white.counts)) +
            "\n\n";

    const Counts big{990, 1010};
    const Ratio factor_b = telescoped_factor(big);
    text += "Scenario B: 990 white and 1010 black draws, in any order\n";
    text += "--------------------------------------------------------\n";
    text += "  like-color factor pairs cancel; the product of all 2000 per-draw\n";
    text += "  factors telescopes to " + fraction_and_decimal(factor_b) + "\n";
    text += "  residual delta JL = " + format_sig4(jl_from_odds(factor_b)) +
            " (each of the 20 surviving black factors weighs\n";
    text += "  under 5e-4; the largest is " +
            format_sig4(jl_from_odds(update_factor(Color::Black, Counts{990, 990}))) + ")\n";
    text += "  final odds (W:B): " + fraction_and_decimal(factor_b) + "\n";
    text += "  P(white next) = " + probability_line(predictive_white(big)) + "\n";
    text += "  P(black next) = " + probability_line(predictive_black(big)) + "\n\n";

    text += "Both scenarios hold an excess of exactly 20 black draws, yet the\n";
    text += "final odds differ: 1/21 against white after 20 draws, 991/1011 after\n";
    text += "2000.  A draw's weight of evidence shrinks with the number of\n";
    text += "like-color draws already seen, so summing fixed per-argument weights\n";
    text += "(balancing reasons) does not apply to these predictive arguments;\n";
    text += "only for fixed symmetric compositions does the count difference\n";
    text += "alone settle the judgement.\n";
    return text;
}

// ---------------------------------------------------------------- twobox

std::string render_twobox(double p1, double p2, const Counts& counts) {
    const auto space = DiscreteHypothesisSpace::uniform({p1, p2});
    const auto post = posterior(counts, space);
    const double predictive = predictive_white(counts, space);
    const double odds12 = combined_odds(counts, p1, p2);

    std::string text;
    text += "Two-box evidence report\n";
    text += "-----------------------\n";
    text += "  box 1: white fraction " + format_full(p1) + ", prior 0.5\n";
    text += "  box 2: white fraction " + format_full(p2) + ", prior 0.5\n";
    text += "  observed: " + std::to_string(counts.n_white) + " white, " +
            std::to_string(counts.n_black) + " black\n";
    if (p2 == 1.0 - p1) {
        text += "  symmetric compositions (p2 = 1 - p1): white and black weights\n";
        text += "  cancel pairwise, so only the black-white count difference\n";
        text += "  matters and balancing reasons holds.\n";
    }
    const auto delta = [&](Color c) {
        try {
            return format_sig4(single_delta_jl(c, p1, p2));
        } catch (const UndefinedEvidenceError&) {
            return std::string("undefined (both likelihoods zero)");
        }
    };
    text += "  delta JL per white draw (box 1 vs box 2): " + delta(Color::White) + "\n";
    text += "  delta JL per black draw (box 1 vs box 2): " + delta(Color::Black) + "\n";
    text += "  combined odds (box 1 : box 2) = " + format_sig4(odds12) +
            ", JL = " + format_sig4(std::log10(odds12)) + "\n";
    for (std::size_t i = 0; i < 2; ++i) {
        text += "  P(box " + std::to_string(i + 1) + " | data) = " +
                format_sig4(post.weights[i]);
        if (post.weights[i] == 0.0) {
            text += "  (ruled out)";
        }
        text += "\n";
    }
    text += "  P(white next) = " + format_sig4(predictive) + "\n";
    return text;
}

// ----------------------------------------------------------------- curve

std::string curve_csv(const std::vector<DensityCurve>& curves) {
    std::string text = "n_white,n_black,p,density\n";
    for (const auto& c : curves) {
        const std::string prefix =
            std::to_string(c.counts.n_white) + "," + std::to_string(c.counts.n_black) + ",";
        for (const auto& pt : c.points) {
            text += prefix;
            text += format_full(pt.p);
            text += ",";
            text += format_full(pt.density);
            text += "\n";
        }
    }
    return text;
}

std::string curve_json(const std::vector<DensityCurve>& curves, ordered_json meta) {
    ordered_json doc;
    doc["meta"] = std::move(meta);
    auto& rows = doc["rows"];
    rows = ordered_json::array();
    for (const auto& c : curves) {
        for (const auto& pt : c.points) {
            ordered_json row;
            row["n_white"] = c.counts.n_white;
            row["n_black"] = c.counts.n_black;
            row["p"] = pt.p;
            row["density"] = pt.density;
            rows.push_back(std::move(row));
        }
    }
    return doc.dump(2) + "\n";
}

// -------------------------------------------------------------- simulate

constexpr std::string_view kSimulateHeader =
    "record,draw,color,factor,factor_decimal,delta_jl,jl,n_white,n_black,odds,"
    "odds_decimal,predictive_white,predictive_white_decimal,predictive_black,"
    "predictive_black_decimal,beta_mean,beta_sd";

std::string simulate_csv(const SimulationTrace& trace) {
    std::string text{kSimulateHeader};
    text += "\n";
    double running_jl = 0.0;
    Counts counts;
    for (const auto& step : trace.steps) {
        running_jl += step.delta_jl;
        counts = counts.with(step.color);
        text += "step,";
        text += std::to_string(step.index);
        text += ",";
        text += color_code(step.color);
        text += ",";
        text += step.factor.to_string() + "," + format_full(step.factor.value()) + ",";
        text += format_full(step.delta_jl) + "," + format_full(running_jl) + ",";
        text += std::to_string(counts.n_white) + "," + std::to_string(counts.n_black) + ",";
        text += step.odds.to_string() + "," + format_full(step.odds.value()) + ",";
        text += step.predictive_white.to_string() + "," +
                format_full(step.predictive_white.value()) + ",";
        text += step.predictive_black.to_string() + "," +
                format_full(step.predictive_black.value()) + ",";
        text += format_full(mean(counts)) + "," + format_full(sd(counts));
        text += "\n";
    }
    const auto& s = trace.summary;
    text += "summary,,,,,,";
    text += format_full(s.final_jl) + ",";
    text += std::to_string(s.counts.n_white) + "," + std::to_string(s.counts.n_black) + ",";
    text += s.final_odds.to_string() + "," + format_full(s.final_odds.value()) + ",";
    text += s.predictive_white.to_string() + "," + format_full(s.predictive_white.value()) + ",";
    text += s.predictive_black.to_string() + "," + format_full(s.predictive_black.value()) + ",";
    text += format_full(s.beta_mean) + "," + format_full(s.beta_sd);
    text += "\n";
    return text;
}

std::string simulate_json(const SimulationTrace& trace, ordered_json meta) {
    ordered_json doc;
    doc["meta"] = std::move(meta);
    auto& rows = doc["rows"];
    rows = ordered_json::array();
    double running_jl = 0.0;
    Counts counts;
    for (const auto& step : trace.steps) {
        running_jl += step.delta_jl;
        counts = counts.with(step.color);
        ordered_json row;
        row["record"] = "step";
        row["draw"] = step.index;
        row["color"] = std::string(1, color_code(step.color));
        row["factor"] = step.factor.to_string();
        row["factor_decimal"] = step.factor.value();
        row["delta_jl"] = step.delta_jl;
        row["jl"] = running_jl;
        row["n_white"] = counts.n_white;
        row["n_black"] = counts.n_black;
        row["odds"] = step.odds.to_string();
        row["odds_decimal"] = step.odds.value();
        row["predictive_white"] = step.predictive_white.to_string();
        row["predictive_white_decimal"] = step.predictive_white.value();
        row["predictive_black"] = step.predictive_black.to_string();
        row["predictive_black_decimal"] = step.predictive_black.value();
        row["beta_mean"] = mean(counts);
        row["beta_sd"] = sd(counts);
        rows.push_back(std::move(row));
    }
    const auto& s = trace.summary;
    ordered_json row;
    row["record"] = "summary";
    row["draw"] = nullptr;
    row["color"] = nullptr;
    row["factor"] = nullptr;
    row["factor_decimal"] = nullptr;
    row["delta_jl"] = nullptr;
    row["jl"] = s.final_jl;
    row["n_white"] = s.counts.n_white;
    row["n_black"] = s.counts.n_black;
    row["odds"] = s.final_odds.to_string();
    row["odds_decimal"] = s.final_odds.value();
    row["predictive_white"] = s.predictive_white.to_string();
    row["predictive_white_decimal"] = s.predictive_white.value();
    row["predictive_black"] = s.predictive_black.to_string();
    row["predictive_black_decimal"] = s.predictive_black.value();
    row["beta_mean"] = s.beta_mean;
    row["beta_sd"] = s.beta_sd;
    rows.push_back(std::move(row));
    return doc.dump(2) + "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sequential Bayesian evidence for the bag-of-beans urn: odds, "
                 "weights of evidence, the rule of succession and seeded simulations"};
    app.name("beanbag");
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));
    app.failure_message([](const CLI::App*, const CLI::Error& e) {
        return std::string("error: ") + e.what() + "\n";
    });

    auto* peirce = app.add_subcommand(
        "peirce", "Report the 20-black vs 1010-black/990-white contrast");

    auto* curve_cmd = app.add_subcommand(
        "curve", "Tabulate posterior densities of the white proportion");
    std::vector<std::string> counts_args;
    std::uint64_t grid_points = 1001;
    std::string curve_format = "csv";
    std::string curve_out = "-";
    curve_cmd->add_option("-c,--counts", counts_args,
                          "Curve counts as N_WHITE,N_BLACK (repeatable); default "
                          "1,1 2,2 5,5 10,10 25,25 50,50");
    curve_cmd->add_option("-g,--grid-points", grid_points, "Grid points including endpoints")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{10000001}))
        ->capture_default_str();
    curve_cmd->add_option("-f,--format", curve_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    curve_cmd->add_option("-o,--out", curve_out, "Output path ('-' for stdout)")
        ->capture_default_str();

    auto* simulate = app.add_subcommand(
        "simulate", "Run a seeded draw-with-replacement experiment");
    double true_p = 0.0;
    std::uint64_t sim_n = 0;
    std::uint64_t seed = 0;
    std::string sim_format = "csv";
    std::string sim_out = "-";
    bool with_trace = false;
    simulate->add_option("-p,--true-p", true_p, "True white proportion of the urn")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    simulate->add_option("-n,--n", sim_n, "Number of draws")->required();
    simulate->add_option("-s,--seed", seed, "Generator seed (required: runs are reproducible)")
        ->required();
    simulate->add_option("-f,--format", sim_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    simulate->add_flag("-t,--trace", with_trace, "Emit one row per draw, not just the summary");
    simulate->add_option("-o,--out", sim_out, "Output path ('-' for stdout)")
        ->capture_default_str();

    auto* twobox = app.add_subcommand(
        "twobox", "Posterior for two candidate compositions after observed counts");
    double p1 = 0.0;
    double p2 = 0.0;
    std::uint64_t tb_white = 0;
    std::uint64_t tb_black = 0;
    twobox->add_option("--p1", p1, "White fraction of box 1")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    twobox->add_option("--p2", p2, "White fraction of box 2")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    twobox->add_option("-w,--n-white", tb_white, "Observed white draws")->capture_default_str();
    twobox->add_option("-b,--n-black", tb_black, "Observed black draws")->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("beanbag");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (peirce->parsed()) {
            out << render_peirce();
            out.flush();
        } else if (curve_cmd->parsed()) {
            std::vector<Counts> counts;
            if (counts_args.empty()) {
                counts = {Counts{1, 1}, Counts{2, 2}, Counts{5, 5},
                          Counts{10, 10}, Counts{25, 25}, Counts{50, 50}};
            } else {
                for (const auto& text : counts_args) {
                    counts.push_back(parse_counts_pair(text));
                }
            }
            std::vector<DensityCurve> curves;
            curves.reserve(counts.size());
            for (const Counts& c : counts) {
                curves.push_back(curve(c, grid_points));
            }
            if (curve_format == "csv") {
                write_output(curve_out, curve_csv(curves), out);
            } else {
                ordered_json arguments;
                auto& pairs = arguments["counts"];
                pairs = ordered_json::array();
                for (const Counts& c : counts) {
                    pairs.push_back({c.n_white, c.n_black});
                }
                arguments["grid_points"] = grid_points;
                arguments["format"] = curve_format;
                arguments["out"] = curve_out;
                write_output(curve_out,
                             curve_json(curves, meta_block("curve", std::move(arguments), nullptr)),
                             out);
            }
        } else if (simulate->parsed()) {
            const auto trace = run_experiment(true_p, sim_n, RngSpec{seed}, with_trace);
            if (sim_format == "csv") {
                write_output(sim_out, simulate_csv(trace), out);
            } else {
                ordered_json arguments;
                arguments["true_p"] = true_p;
                arguments["n"] = sim_n;
                arguments["seed"] = seed;
                arguments["algorithm"] = std::string(RngSpec::algorithm);
                arguments["format"] = sim_format;
                arguments["trace"] = with_trace;
                arguments["out"] = sim_out;
                write_output(sim_out,
                             simulate_json(trace, meta_block("simulate", std::move(arguments), &seed)),
                             out);
            }
        } else if (twobox->parsed()) {
            if (p1 == p2) {
                err << "error: --p1 and --p2 must be distinct\n";
                return 1;
            }
            out << render_twobox(p1, p2, Counts{tb_white, tb_black});
            out.flush();
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace beanbag::cli
