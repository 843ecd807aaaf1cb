// bnevo: evolve ring-lattice boolean networks toward higher-order information
// structures and characterize the resulting dynamics.
//
// Subcommands: evolve, analyze, baseline, report. Every run is reproducible
// from its flags and seed; the seed is echoed and recorded in the outputs.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bnevo/analysis.hpp"
#include "bnevo/evolve.hpp"
#include "bnevo/genome_io.hpp"
#include "bnevo/report.hpp"
#include "bnevo/svg.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace bnevo;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240612;

const std::map<std::string, Objective> kObjectiveNames = {
    {"redundancy", Objective::kMaxRedundancy},
    {"synergy", Objective::kMaxSynergy},
    {"tse", Objective::kMaxTse},
};

std::string fmt(double v) { return detail::format_double(v); }

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << text;
}

void write_run_manifest(const fs::path& dir, const nlohmann::json& doc) {
    write_text_file(dir / "run.json", doc.dump(2) + "\n");
}

// files or directories -> sorted list of .json genome paths
std::vector<fs::path> collect_genome_files(const std::vector<std::string>& inputs) {
    std::vector<fs::path> files;
    for (const std::string& in : inputs) {
        const fs::path p(in);
        if (fs::is_directory(p)) {
            for (const auto& e : fs::directory_iterator(p))
                if (e.is_regular_file() && e.path().extension() == ".json" &&
                    e.path().filename() != "run.json")
                    files.push_back(e.path());
        } else {
            files.push_back(p);
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

void write_evolution_log(const fs::path& path,
                         const std::vector<GenerationRecord>& history) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << "generation,fitness_mean,fitness_max,fitness_min\n";
    for (const GenerationRecord& r : history)
        out << r.generation << ',' << fmt(r.fitness_mean) << ','
            << fmt(r.fitness_max) << ',' << fmt(r.fitness_min) << "\n";
}

int cmd_evolve(const std::string& objective_arg, int population, int generations,
               double mutation_rate, int tse_cap, std::uint64_t seed,
               bool population_given, const std::string& out_dir) {
    EvolutionConfig config;
    config.objective = kObjectiveNames.at(objective_arg);
    // paper-style defaults: 500 for the O-information objectives, 200 for TSE
    config.population_size =
        population_given ? population
                         : (config.objective == Objective::kMaxTse ? 200 : 500);
    config.generations = generations;
    config.mutation_rate = mutation_rate;
    config.tse_subset_cap = tse_cap;
    config.master_seed = seed;
    validate(config);

    std::cout << "seed: " << seed << "\n";
    std::cout << "objective: " << objective_name(config.objective) << "\n";

    const EvolutionResult result = run_evolution(config);

    const fs::path out(out_dir);
    fs::create_directories(out / "genomes");
    write_evolution_log(out / "evolution_log.csv", result.history);
    for (std::size_t k = 0; k < result.final_population.size(); ++k)
        save_network((out / "genomes" / ("rank_" + std::to_string(k) + ".json"))
                         .string(),
                     result.final_population[k].net);
    write_run_manifest(out, {{"command", "evolve"},
                             {"objective", objective_name(config.objective)},
                             {"population", config.population_size},
                             {"generations", config.generations},
                             {"mutation_rate", config.mutation_rate},
                             {"tse_subset_cap", config.tse_subset_cap},
                             {"seed", config.master_seed}});
    std::cout << "final best fitness: "
              << fmt(result.final_population.front().fitness) << "\n";
    return 0;
}

int cmd_analyze(const std::vector<std::string>& genome_inputs,
                const std::string& class_label, std::uint64_t seed,
                int tse_cap, int derrida_samples, const std::string& out_file) {
    std::cout << "seed: " << seed << "\n";
    AnalysisSettings settings;
    settings.master_seed = seed;
    settings.tse_subset_cap = tse_cap;
    settings.derrida_samples_per_m = derrida_samples;

    const auto files = collect_genome_files(genome_inputs);
    if (files.empty()) throw std::runtime_error("no genome files found");
    std::vector<AnalysisRow> rows;
    rows.reserve(files.size());
    for (const fs::path& f : files) {
        const BooleanNetwork net = load_network(f.string());
        rows.push_back(
            analyze_network(net, f.stem().string(), class_label, settings));
    }
    std::ofstream out(out_file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + out_file);
    write_analysis_csv(out, rows);
    std::cout << "analyzed " << rows.size() << " networks -> " << out_file << "\n";
    return 0;
}

int cmd_baseline(int count, std::uint64_t seed, int tse_cap, int derrida_samples,
                 const std::string& out_dir) {
    if (count < 1) throw std::runtime_error("count must be >= 1");
    std::cout << "seed: " << seed << "\n";
    const fs::path out(out_dir);
    fs::create_directories(out / "genomes");

    AnalysisSettings settings;
    settings.master_seed = seed;
    settings.tse_subset_cap = tse_cap;
    settings.derrida_samples_per_m = derrida_samples;

    std::vector<AnalysisRow> rows;
    rows.reserve(std::size_t(count));
    for (int i = 0; i < count; ++i) {
        Rng rng = make_rng(derive_seed(seed, 0x62617365ull, std::uint64_t(i)));
        const BooleanNetwork net = random_network(rng);
        const std::string id = "net_" + std::to_string(i);
        save_network((out / "genomes" / (id + ".json")).string(), net);
        rows.push_back(analyze_network(net, id, "random", settings));
    }
    std::ofstream report(out / "report.csv", std::ios::binary);
    if (!report)
        throw std::runtime_error("cannot open for writing: " +
                                 (out / "report.csv").string());
    write_analysis_csv(report, rows);
    write_run_manifest(out, {{"command", "baseline"},
                             {"count", count},
                             {"tse_subset_cap", tse_cap},
                             {"derrida_samples_per_m", derrida_samples},
                             {"seed", seed}});
    std::cout << "baseline of " << count << " networks -> " << out_dir << "\n";
    return 0;
}

std::vector<TrajectorySeries> read_trajectory_csv(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open trajectory log: " + path.string());
    std::string line;
    if (!std::getline(in, line))
        throw CsvFormatError(path.string() + ": empty evolution log");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "generation,fitness_mean,fitness_max,fitness_min")
        throw CsvFormatError(path.string() + ": evolution log header mismatch");
    TrajectorySeries mean{"fitness_mean", {}}, best{"fitness_max", {}};
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = detail::split_csv_line(line);
        if (f.size() != 4)
            throw CsvFormatError(path.string() + ": expected 4 fields per row");
        mean.values.push_back(std::stod(f[1]));
        best.values.push_back(std::stod(f[2]));
    }
    return {mean, best};
}

int cmd_report(const std::vector<std::string>& input_csvs,
               const std::vector<std::string>& trajectory_csvs,
               const std::string& out_dir) {
    std::vector<AnalysisRow> rows;
    for (const std::string& path : input_csvs) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open analysis CSV: " + path);
        try {
            const auto part = read_analysis_csv(in);
            rows.insert(rows.end(), part.begin(), part.end());
        } catch (const CsvFormatError& e) {
            throw CsvFormatError(path + ": " + e.what());
        }
    }
    std::map<std::string, bool> classes;
    for (const AnalysisRow& r : rows) classes[r.class_label] = true;
    if (classes.size() < 2)
        throw std::runtime_error("report needs rows from at least two classes");

    const fs::path out(out_dir);
    fs::create_directories(out);

    std::ofstream comp(out / "comparisons.csv", std::ios::binary);
    if (!comp)
        throw std::runtime_error("cannot open for writing: " +
                                 (out / "comparisons.csv").string());
    write_comparison_csv(comp, compare_classes(rows));

    for (const auto& [metric, by_class] : metric_values_by_class(rows)) {
        std::vector<BoxSeries> series;
        for (const auto& [label, values] : by_class)
            series.push_back({label, values});
        write_text_file(out / ("box_" + metric + ".svg"),
                        box_plot_svg(metric, series));
    }
    for (std::size_t i = 0; i < trajectory_csvs.size(); ++i) {
        const fs::path src(trajectory_csvs[i]);
        write_text_file(
            out / ("trajectory_" + std::to_string(i) + ".svg"),
            trajectory_svg(src.stem().string(), read_trajectory_csv(src)));
    }
    std::cout << "report -> " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"evolution and analysis of ring-lattice boolean networks"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a TOML/INI file");

    // evolve
    auto* evolve = app.add_subcommand("evolve", "run the evolutionary optimizer");
    std::string objective = "redundancy";
    int population = 0;
    int generations = 750;
    double mutation_rate = 0.001;
    int tse_cap = 75;
    std::uint64_t seed = kDefaultSeed;
    std::string out_dir = "evolve_out";
    evolve->add_option("--objective", objective, "redundancy | synergy | tse")
        ->check(CLI::IsMember({"redundancy", "synergy", "tse"}))
        ->capture_default_str();
    auto* pop_opt = evolve->add_option(
        "--population", population,
        "population size (default 500, or 200 for the tse objective)");
    evolve->add_option("--generations", generations, "generations to run")
        ->capture_default_str();
    evolve->add_option("--mutation-rate", mutation_rate, "per-bit flip probability")
        ->capture_default_str();
    evolve->add_option("--tse-cap", tse_cap, "subsets sampled per TSE scale")
        ->capture_default_str();
    evolve->add_option("--seed", seed, "master seed")->capture_default_str();
    evolve->add_option("--out", out_dir, "output directory")->capture_default_str();

    // analyze
    auto* analyze = app.add_subcommand("analyze", "characterize stored genomes");
    std::vector<std::string> genome_inputs;
    std::string class_label = "random";
    std::uint64_t analyze_seed = kDefaultSeed;
    int analyze_tse_cap = 75;
    int derrida_samples = 2000;
    std::string analyze_out = "report.csv";
    analyze->add_option("--genomes", genome_inputs,
                        "genome JSON files and/or directories")
        ->required();
    analyze->add_option("--class", class_label,
                        "class label recorded in the report")
        ->check(CLI::IsMember({"random", "redundant", "synergistic", "complex"}))
        ->capture_default_str();
    analyze->add_option("--seed", analyze_seed, "master seed")
        ->capture_default_str();
    analyze->add_option("--tse-cap", analyze_tse_cap, "subsets per TSE scale")
        ->capture_default_str();
    analyze->add_option("--derrida-samples", derrida_samples,
                        "perturbation samples per m")
        ->capture_default_str();
    analyze->add_option("--out", analyze_out, "output CSV path")
        ->capture_default_str();

    // baseline
    auto* baseline =
        app.add_subcommand("baseline", "generate and analyze random networks");
    int count = 100;
    std::uint64_t baseline_seed = kDefaultSeed;
    int baseline_tse_cap = 75;
    int baseline_derrida_samples = 2000;
    std::string baseline_out = "baseline_out";
    baseline->add_option("--count", count, "number of random networks")
        ->capture_default_str();
    baseline->add_option("--seed", baseline_seed, "master seed")
        ->capture_default_str();
    baseline->add_option("--tse-cap", baseline_tse_cap, "subsets per TSE scale")
        ->capture_default_str();
    baseline->add_option("--derrida-samples", baseline_derrida_samples,
                         "perturbation samples per m")
        ->capture_default_str();
    baseline->add_option("--out", baseline_out, "output directory")
        ->capture_default_str();

    // report
    auto* report =
        app.add_subcommand("report", "class comparisons, box plots, trajectories");
    std::vector<std::string> input_csvs;
    std::vector<std::string> trajectory_csvs;
    std::string report_out = "report_out";
    report->add_option("--inputs", input_csvs, "analysis CSVs (>= 2 classes)")
        ->required();
    report->add_option("--trajectory", trajectory_csvs,
                       "evolution log CSVs to plot");
    report->add_option("--out", report_out, "output directory")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (evolve->parsed())
            return cmd_evolve(objective, population, generations, mutation_rate,
                              tse_cap, seed, pop_opt->count() > 0, out_dir);
        if (analyze->parsed())
            return cmd_analyze(genome_inputs, class_label, analyze_seed,
                               analyze_tse_cap, derrida_samples, analyze_out);
        if (baseline->parsed())
            return cmd_baseline(count, baseline_seed, baseline_tse_cap,
                                baseline_derrida_samples, baseline_out);
        if (report->parsed())
            return cmd_report(input_csvs, trajectory_csvs, report_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
