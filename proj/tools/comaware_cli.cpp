// Command-line front end: generate networks, compute statistics, replicate
// the preset experiments.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "comaware/comaware.hpp"

namespace fs = std::filesystem;
using namespace comaware;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNonConvergence = 3;

std::optional<PowerLawEstimator> parse_estimator(const std::string& s) {
    if (s == "continuous") {
        return PowerLawEstimator::ContinuousCorrected;
    }
    if (s == "discrete") {
        return PowerLawEstimator::Discrete;
    }
    return std::nullopt;
}

void emit_report(const ExperimentReport& report, const std::string& report_path) {
    write_report_table(report, std::cout);
    if (!report_path.empty()) {
        const fs::path p(report_path);
        if (p.has_parent_path()) {
            fs::create_directories(p.parent_path());
        }
        std::ofstream out(p);
        if (!out) {
            throw std::runtime_error("cannot write " + report_path);
        }
        write_report_csv(report, out);
        std::cout << "report written to " << report_path << '\n';
    }
}

int cmd_generate(const std::string& config_path, std::uint64_t seed, std::size_t runs, const std::string& out_dir,
                 std::size_t xmin, PowerLawEstimator estimator, std::string report_path, std::size_t threads) {
    GrowthParams params;
    try {
        params = load_config(config_path);
        validate_params(params);
    } catch (const ValidationError& e) {
        std::cerr << e.what() << '\n';
        return kExitInput;
    }
    std::vector<RunOutput> results;
    try {
        results = run_experiment(params, seed, runs, xmin, estimator, threads);
    } catch (const NonConvergenceError& e) {
        std::cerr << "non-convergence: " << e.what() << '\n';
        return kExitNonConvergence;
    }

    fs::create_directories(out_dir);
    ExperimentReport report;
    for (std::size_t r = 0; r < results.size(); ++r) {
        std::ostringstream name;
        name << "run_" << std::setw(3) << std::setfill('0') << r + 1 << ".edgelist";
        write_edge_list(results[r].growth.graph, fs::path(out_dir) / name.str());
        report.runs.push_back(results[r].stats);
    }
    if (report_path.empty()) {
        report_path = (fs::path(out_dir) / "report.csv").string();
    }
    emit_report(report, report_path);
    return kExitOk;
}

int cmd_stats(const std::string& path, std::size_t xmin, PowerLawEstimator estimator, const std::string& out_path) {
    Graph g;
    try {
        g = load_edge_list(path);
    } catch (const ParseError& e) {
        std::cerr << path << ": " << e.what() << '\n';
        return kExitInput;
    } catch (const DataError& e) {
        std::cerr << path << ": " << e.what() << '\n';
        return kExitInput;
    }
    NetworkStats s;
    try {
        s = compute_stats(g, xmin, estimator);
    } catch (const std::domain_error& e) {
        std::cerr << path << ": " << e.what() << '\n';
        return kExitInput;
    }

    std::printf("nodes                   %zu\n", g.node_count());
    std::printf("edges                   %zu\n", g.edge_count());
    std::printf("clustering coefficient  %.4f\n", s.clustering_coefficient);
    std::printf("avg path length         %.4f\n", s.avg_path_length);
    std::printf("modularity              %.4f\n", s.modularity);
    std::printf("diameter                %.0f\n", s.diameter);
    std::printf("power law exponent      %.4f  (xmin=%zu, %s)\n", s.power_law_exponent, xmin,
                to_string(estimator));
    std::ostringstream row;
    write_csv_header(row);
    write_stats_row(row, fs::path(path).stem().string(), s);
    std::cout << '\n' << row.str();
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << row.str();
    }
    return kExitOk;
}

int cmd_replicate(const std::string& name, std::size_t runs, std::uint64_t seed, std::optional<std::size_t> xmin,
                  PowerLawEstimator estimator, const std::string& report_path, std::size_t threads) {
    const auto preset = find_preset(name);
    if (!preset) {
        std::cerr << "unknown preset '" << name << "' (expected karate, caltech, exp1..exp8)\n";
        return kExitInput;
    }
    std::vector<RunOutput> results;
    try {
        results = run_experiment(preset->params, seed, runs, xmin.value_or(preset->xmin), estimator, threads);
    } catch (const NonConvergenceError& e) {
        std::cerr << "non-convergence: " << e.what() << '\n';
        return kExitNonConvergence;
    }
    ExperimentReport report;
    report.observed = preset->observed;
    for (const auto& r : results) {
        report.runs.push_back(r.stats);
    }
    std::cout << "preset " << preset->name << ", " << runs << " run(s), seeds " << seed << ".." << seed + runs - 1
              << "\n\n";
    emit_report(report, report_path);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Community-aware network growth model"};
    app.require_subcommand(1);

    std::uint64_t seed = 42;
    std::size_t runs = 1;
    std::size_t threads = 0;
    std::string estimator_name = "continuous";

    auto* gen = app.add_subcommand("generate", "Grow networks from a JSON parameter file");
    std::string config_path;
    std::string out_dir = "out";
    std::string report_path;
    std::size_t gen_xmin = 5;
    gen->add_option("--config", config_path, "JSON file with n, m, community_probs, comp, rp_n, ...")->required();
    gen->add_option("--seed", seed, "Base seed; run r uses seed + r")->capture_default_str();
    gen->add_option("--runs", runs, "Number of independent runs")->capture_default_str()->check(CLI::PositiveNumber);
    gen->add_option("--out-dir,--out", out_dir, "Directory for edge lists and report.csv")->capture_default_str();
    gen->add_option("--xmin", gen_xmin, "Power-law lower bound for the report")->capture_default_str();
    gen->add_option("--report", report_path, "Report CSV path (default <out-dir>/report.csv)");

    auto* stats = app.add_subcommand("stats", "Statistics of an edge-list file");
    std::string edge_path;
    std::size_t stats_xmin = 2;
    std::string stats_out;
    stats->add_option("edgelist", edge_path, "Edge-list file")->required();
    stats->add_option("--xmin", stats_xmin, "Power-law lower bound")->capture_default_str();
    stats->add_option("--out", stats_out, "Also write the CSV row here");

    auto* rep = app.add_subcommand("replicate", "Run a preset experiment");
    std::string preset;
    std::optional<std::size_t> rep_xmin;
    std::string rep_report;
    rep->add_option("preset,--preset", preset, "karate, caltech, exp1..exp8");
    rep->add_option("--runs", runs, "Number of independent runs")->capture_default_str()->check(CLI::PositiveNumber);
    rep->add_option("--seed", seed, "Base seed; run r uses seed + r")->capture_default_str();
    rep->add_option("--xmin", rep_xmin, "Override the preset's power-law lower bound");
    rep->add_option("--report", rep_report, "Write the report as CSV");

    for (auto* sub : {gen, stats, rep}) {
        sub->add_option("--estimator", estimator_name, "Power-law estimator: continuous or discrete")
            ->capture_default_str()
            ->check(CLI::IsMember({"continuous", "discrete"}));
        sub->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }
    const auto estimator = *parse_estimator(estimator_name);

    try {
        if (*gen) {
            return cmd_generate(config_path, seed, runs, out_dir, gen_xmin, estimator, report_path, threads);
        }
        if (*stats) {
            return cmd_stats(edge_path, stats_xmin, estimator, stats_out);
        }
        if (preset.empty()) {
            std::cerr << "replicate: a preset name is required\n";
            return kExitInput;
        }
        return cmd_replicate(preset, runs, seed, rep_xmin, estimator, rep_report, threads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
