// Benchmark harness CLI: multi-seed experiments, archive scoring, reference
// set generation, and report/sweep exports.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "momm/bench.hpp"
#include "momm/indicators.hpp"
#include "momm/problems.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string out;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int runs = 0;
    long budget = 0;
    int pop = 0;
    int jobs = 1;
};

void apply_overrides(momm::ExperimentConfig& config, const CommonFlags& flags) {
    if (!flags.out.empty()) config.output_dir = flags.out;
    if (flags.seed_set) config.base_seed = flags.seed;
    if (flags.runs > 0) config.runs = flags.runs;
    if (flags.budget > 0) config.budget = flags.budget;
    if (flags.pop > 0) config.population = flags.pop;
}

int run_and_export(const momm::ExperimentConfig& config, int jobs, bool execute) {
    auto records = execute ? momm::run_experiment(config, jobs, &std::cout)
                           : momm::load_records(config);
    std::vector<std::string> problem_names;
    for (const auto& p : config.problems) {
        problem_names.push_back(
            momm::make_problem(p.name, p.dimension)->descriptor().name);
    }
    std::vector<std::string> algorithm_labels;
    for (const auto& a : momm::resolve_algorithms(config)) {
        algorithm_labels.push_back(a.label);
    }
    auto summary = momm::summarize(records, problem_names, algorithm_labels,
                                   config.baseline);
    momm::export_results(config, summary, records);
    std::cout << "tables written under " << config.output_dir << "/tables\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-modal multi-objective optimization benchmark harness"};
    app.require_subcommand(1);

    CommonFlags flags;

    auto add_common = [&](CLI::App* cmd, bool with_config) {
        if (with_config) {
            cmd->add_option("--config", flags.config_path, "experiment config file")
                ->required();
        }
        cmd->add_option("--out", flags.out, "output directory override");
        cmd->add_option("--seed", flags.seed, "base seed override")
            ->each([&](const std::string&) { flags.seed_set = true; });
        cmd->add_option("--runs", flags.runs, "run count override");
        cmd->add_option("--budget", flags.budget, "evaluation budget override");
        cmd->add_option("--pop", flags.pop, "population size override");
    };

    // run: execute a config end to end.
    auto* cmd_run = app.add_subcommand("run", "execute an experiment config");
    add_common(cmd_run, true);
    cmd_run->add_option("--jobs", flags.jobs, "parallel worker count");

    // report: summarize an already-executed experiment.
    auto* cmd_report =
        app.add_subcommand("report", "summarize an executed experiment");
    add_common(cmd_report, true);

    // score: indicators for one archive file.
    auto* cmd_score = app.add_subcommand("score", "score an archive file");
    std::string score_problem, score_archive, score_refset;
    int score_dim = 0, score_n = 10000;
    cmd_score->add_option("--problem", score_problem, "problem name")->required();
    cmd_score->add_option("--dim", score_dim, "decision dimension (polygon)");
    cmd_score->add_option("--archive", score_archive, "archive file")->required();
    cmd_score->add_option("--refset", score_refset,
                          "reference set file (generated when omitted)");
    cmd_score->add_option("--seed", flags.seed, "reference sampling seed")
        ->each([&](const std::string&) { flags.seed_set = true; });
    cmd_score->add_option("--n", score_n, "reference set size");

    // refset: generate and save a reference set.
    auto* cmd_refset = app.add_subcommand("refset", "generate a reference set");
    std::string refset_problem, refset_out;
    int refset_dim = 0, refset_n = 10000;
    cmd_refset->add_option("--problem", refset_problem, "problem name")->required();
    cmd_refset->add_option("--dim", refset_dim, "decision dimension (polygon)");
    cmd_refset->add_option("--n", refset_n, "point count");
    cmd_refset->add_option("--seed", flags.seed, "sampling seed")
        ->each([&](const std::string&) { flags.seed_set = true; });
    cmd_refset->add_option("--out", refset_out, "output file")->required();

    // sweep: mu-sweep shortcut without a config file.
    auto* cmd_sweep = app.add_subcommand("sweep", "run a mu sweep on one problem");
    std::string sweep_problem = "polygon", sweep_scalarizer = "tch";
    int sweep_dim = 0;
    std::vector<int> sweep_mu = {2, 3, 4, 5, 6};
    cmd_sweep->add_option("--problem", sweep_problem, "problem name");
    cmd_sweep->add_option("--dim", sweep_dim, "decision dimension (polygon)");
    cmd_sweep->add_option("--mu", sweep_mu, "mu values to sweep");
    cmd_sweep->add_option("--scalarizer", sweep_scalarizer, "tch or pbi")
        ->check(CLI::IsMember({"tch", "pbi"}));
    cmd_sweep->add_option("--out", flags.out, "output directory");
    cmd_sweep->add_option("--seed", flags.seed, "base seed")
        ->each([&](const std::string&) { flags.seed_set = true; });
    cmd_sweep->add_option("--runs", flags.runs, "run count");
    cmd_sweep->add_option("--budget", flags.budget, "evaluation budget");
    cmd_sweep->add_option("--pop", flags.pop, "population size");
    cmd_sweep->add_option("--jobs", flags.jobs, "parallel worker count");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_run->parsed()) {
            auto config = momm::load_experiment_config(flags.config_path);
            apply_overrides(config, flags);
            return run_and_export(config, flags.jobs, true);
        }
        if (cmd_report->parsed()) {
            auto config = momm::load_experiment_config(flags.config_path);
            apply_overrides(config, flags);
            return run_and_export(config, 1, false);
        }
        if (cmd_score->parsed()) {
            auto problem = momm::make_problem(score_problem, score_dim);
            momm::ReferenceSet refset;
            if (!score_refset.empty()) {
                refset = momm::read_reference_set(score_refset);
            } else {
                momm::RandomStream rng(flags.seed_set ? flags.seed : 1);
                refset = problem->sample_reference_set(score_n, rng);
            }
            auto archive = momm::read_archive(score_archive);
            auto report = momm::score_archive(archive, refset);
            std::cout << "archive_size=" << report.archive_size
                      << "\nigd_plus=" << report.igd_plus
                      << "\nigdx=" << report.igdx << "\nhv=" << report.hv << "\n";
            return 0;
        }
        if (cmd_refset->parsed()) {
            auto problem = momm::make_problem(refset_problem, refset_dim);
            momm::RandomStream rng(flags.seed_set ? flags.seed : 1);
            auto refset = problem->sample_reference_set(refset_n, rng);
            momm::write_reference_set(refset_out, refset, problem->descriptor());
            std::cout << "wrote " << refset.decision_points.size() << " points to "
                      << refset_out << "\n";
            return 0;
        }
        if (cmd_sweep->parsed()) {
            momm::ExperimentConfig config;
            config.problems.push_back({sweep_problem, sweep_dim});
            momm::AlgorithmSpec algo;
            algo.id = "moeadmm-" + sweep_scalarizer;
            algo.label = algo.id;
            config.algorithms.push_back(algo);
            config.mu_sweep = sweep_mu;
            config.runs = flags.runs > 0 ? flags.runs : 11;
            config.output_dir = flags.out.empty() ? "sweep-out" : flags.out;
            if (flags.seed_set) config.base_seed = flags.seed;
            if (flags.budget > 0) config.budget = flags.budget;
            if (flags.pop > 0) config.population = flags.pop;
            return run_and_export(config, flags.jobs, true);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
