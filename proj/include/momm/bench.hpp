#ifndef MOMM_BENCH_HPP
#define MOMM_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "momm/indicators.hpp"
#include "momm/problems.hpp"

namespace momm {

struct ProblemSpec {
    std::string name;  ///< factory name: sympart, ssuf1, suf3, polygon
    int dimension = 0; ///< polygon only; 0 keeps the problem default
};

struct AlgorithmSpec {
    std::string id;    ///< moeadmm-tch | moeadmm-pbi | moead-tch | moead-pbi | moead-ad
    std::string label; ///< column label; defaults to id
    int mu = 4;            ///< sub-population size (moeadmm family)
    int neighborhood = 20; ///< T (moead family)
    double theta = 5.0;    ///< PBI penalty where applicable
};

struct ExperimentConfig {
    std::vector<ProblemSpec> problems;
    std::vector<AlgorithmSpec> algorithms;
    int runs = 31;
    int population = 300;
    long budget = 100000;
    std::vector<int> mu_sweep; ///< expands every moeadmm entry per mu
    std::uint64_t base_seed = 1;
    std::string output_dir = "out";
    int refset_size = 10000;
    std::string baseline; ///< label for significance marks; default first algorithm

    void validate() const;
};

/// Parses the key = value / [section] config format. Unknown keys fail.
ExperimentConfig parse_experiment_config(std::istream& in);
ExperimentConfig load_experiment_config(const std::string& path);

/// The algorithms list with mu_sweep expansion applied (labels gain a
/// -mu<k> suffix; non-moeadmm entries pass through unchanged).
std::vector<AlgorithmSpec> resolve_algorithms(const ExperimentConfig& config);

struct RunRecord {
    std::string algorithm; ///< resolved label
    std::string problem;   ///< descriptor name
    int run = 0;
    std::uint64_t seed = 0;
    IndicatorReport report;
    double wall_seconds = 0.0;
    std::string archive_path;
};

/// Executes every (algorithm x problem x run) cell, persisting records and
/// archives incrementally under config.output_dir; completed cells found on
/// disk are reused instead of re-run. Reference sets are generated (or
/// loaded from cache) once per problem. Deterministic given the config,
/// regardless of jobs.
std::vector<RunRecord> run_experiment(const ExperimentConfig& config,
                                      int jobs = 1,
                                      std::ostream* progress = nullptr);

/// Reads the persisted records of a (possibly partial) experiment without
/// running anything; throws ConfigError naming the missing cells.
std::vector<RunRecord> load_records(const ExperimentConfig& config);

struct CellStats {
    double mean_igd_plus = 0, median_igd_plus = 0, std_igd_plus = 0;
    double mean_igdx = 0, median_igdx = 0, std_igdx = 0;
    double mean_hv = 0, median_hv = 0, std_hv = 0;
    char mark_igd_plus = '='; ///< +, -, or = (tie) vs the baseline
    char mark_igdx = '=';
    char mark_hv = '=';
    bool best_igd_plus = false; ///< best cell in its problem row
    bool best_igdx = false;
    bool best_hv = false;
    int run_count = 0;
};

struct StatsSummary {
    std::vector<std::string> problems;   ///< row order
    std::vector<std::string> algorithms; ///< column order
    std::string baseline;
    std::map<std::pair<std::string, std::string>, CellStats> cells; ///< (problem, algorithm)
};

/// Per-cell statistics plus two-sided rank-sum significance marks against
/// the baseline at p < 0.05 ('+': algorithm better, '-': baseline better,
/// '=': not significant). Lower is better for IGD+ and IGDX, higher for
/// HV. Throws ConfigError listing the gaps when any cell is incomplete.
StatsSummary summarize(const std::vector<RunRecord>& records,
                       const std::vector<std::string>& problems,
                       const std::vector<std::string>& algorithms,
                       const std::string& baseline);

/// Writes the comparison tables (one per indicator), the long-format
/// per-run records, the visualization-run selection (median HV and median
/// IGDX runs per cell), and mu-sweep curves when the config has a sweep.
/// All output is deterministic: fixed orders, fixed formats, no clocks.
void export_results(const ExperimentConfig& config, const StatsSummary& summary,
                    const std::vector<RunRecord>& records);

/// Columnar archive round-trip used for per-run outputs (same row format
/// as reference sets).
void write_archive(const std::string& path, const std::vector<Solution>& archive,
                   const ProblemDescriptor& descriptor);
std::vector<Solution> read_archive(const std::string& path);

/// Runs one (algorithm, problem) cell at the given seed; the entry point
/// workers use. Exposed for scoring tools and tests.
std::vector<Solution> run_algorithm(const AlgorithmSpec& algorithm,
                                    const Problem& problem, int population,
                                    long budget, std::uint64_t seed);

/// True when the id names a registered algorithm.
bool algorithm_known(const std::string& id);

} // namespace momm

#endif // MOMM_BENCH_HPP
