#include "momm/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "momm/baselines.hpp"
#include "momm/moeadmm.hpp"
#include "momm/stats.hpp"

namespace momm {

namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

long parse_long(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        long v = std::stol(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad integer for '" + key + "': " + value);
    }
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad number for '" + key + "': " + value);
    }
}

std::string format_g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_e4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4e", v);
    return buf;
}

std::string sanitize(const std::string& s) {
    std::string out = s;
    for (char& c : out) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '.' &&
            c != '_') {
            c = '_';
        }
    }
    return out;
}

std::string cell_stem(const std::string& problem, const std::string& algorithm,
                      int run) {
    return sanitize(problem) + "__" + sanitize(algorithm) + "__run" +
           std::to_string(run);
}

struct Cell {
    std::size_t problem_index;
    std::size_t algorithm_index;
    int run;
};

// One line per field; unknown fields are ignored so the format can grow.
bool read_record_file(const fs::path& path, RunRecord& out) {
    std::ifstream in(path);
    if (!in) return false;
    std::string line;
    int seen = 0;
    while (std::getline(in, line)) {
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        if (key == "problem") { out.problem = value; ++seen; }
        else if (key == "algorithm") { out.algorithm = value; ++seen; }
        else if (key == "run") { out.run = static_cast<int>(parse_long(key, value)); ++seen; }
        else if (key == "seed") { out.seed = std::stoull(value); ++seen; }
        else if (key == "igd_plus") { out.report.igd_plus = std::stod(value); ++seen; }
        else if (key == "igdx") { out.report.igdx = std::stod(value); ++seen; }
        else if (key == "hv") { out.report.hv = std::stod(value); ++seen; }
        else if (key == "archive_size") { out.report.archive_size = static_cast<int>(parse_long(key, value)); ++seen; }
        else if (key == "wall_seconds") { out.wall_seconds = std::stod(value); ++seen; }
        else if (key == "archive") { out.archive_path = value; ++seen; }
    }
    return seen >= 10;
}

void write_record_file(const fs::path& path, const RunRecord& r) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write record: " + path.string());
    out << "problem=" << r.problem << "\n"
        << "algorithm=" << r.algorithm << "\n"
        << "run=" << r.run << "\n"
        << "seed=" << r.seed << "\n"
        << "igd_plus=" << format_g17(r.report.igd_plus) << "\n"
        << "igdx=" << format_g17(r.report.igdx) << "\n"
        << "hv=" << format_g17(r.report.hv) << "\n"
        << "archive_size=" << r.report.archive_size << "\n"
        << "wall_seconds=" << format_g17(r.wall_seconds) << "\n"
        << "archive=" << r.archive_path << "\n";
    if (!out) throw ConfigError("write failed: " + path.string());
}

std::string problem_display_name(const ProblemSpec& spec) {
    return make_problem(spec.name, spec.dimension)->descriptor().name;
}

// Run index whose value sits at the lower median; ties go to the lower run.
template <typename Pick>
const RunRecord* median_record(const std::vector<const RunRecord*>& cell,
                               Pick pick) {
    std::vector<const RunRecord*> sorted = cell;
    std::sort(sorted.begin(), sorted.end(),
              [&](const RunRecord* a, const RunRecord* b) {
                  if (pick(*a) != pick(*b)) return pick(*a) < pick(*b);
                  return a->run < b->run;
              });
    return sorted[(sorted.size() - 1) / 2];
}

} // namespace

// ---------------------------------------------------------------------------
// Config

void ExperimentConfig::validate() const {
    if (problems.empty()) throw ConfigError("config: no problems listed");
    if (algorithms.empty()) throw ConfigError("config: no algorithms listed");
    if (runs < 1) throw ConfigError("config: runs must be >= 1");
    if (population < 1) throw ConfigError("config: population must be >= 1");
    if (budget < population) throw ConfigError("config: budget below population");
    if (refset_size < 1) throw ConfigError("config: refset_size must be >= 1");
    for (const auto& p : problems) {
        make_problem(p.name, p.dimension); // throws on unknown name / bad D
    }
    std::set<std::string> labels;
    for (const auto& a : resolve_algorithms(*this)) {
        if (!algorithm_known(a.id)) {
            throw ConfigError("config: unknown algorithm id: " + a.id);
        }
        if (!labels.insert(a.label).second) {
            throw ConfigError("config: duplicate algorithm label: " + a.label);
        }
        if (a.mu < 1) throw ConfigError("config: mu must be >= 1");
        if (a.neighborhood < 2) throw ConfigError("config: neighborhood must be >= 2");
    }
    if (!baseline.empty() && !labels.count(baseline)) {
        throw ConfigError("config: baseline label not in algorithm list: " + baseline);
    }
    for (int m : mu_sweep) {
        if (m < 1) throw ConfigError("config: sweep mu values must be >= 1");
    }
}

ExperimentConfig parse_experiment_config(std::istream& in) {
    ExperimentConfig config;
    enum class Section { kGlobal, kProblem, kAlgorithm, kSweep };
    Section section = Section::kGlobal;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t == "[problem]") {
                config.problems.emplace_back();
                section = Section::kProblem;
            } else if (t == "[algorithm]") {
                config.algorithms.emplace_back();
                section = Section::kAlgorithm;
            } else if (t == "[sweep]") {
                section = Section::kSweep;
            } else {
                throw ConfigError("config line " + std::to_string(line_no) +
                                  ": unknown section " + t);
            }
            continue;
        }
        auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected key = value");
        }
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        switch (section) {
            case Section::kGlobal:
                if (key == "runs") config.runs = static_cast<int>(parse_long(key, value));
                else if (key == "population") config.population = static_cast<int>(parse_long(key, value));
                else if (key == "budget") config.budget = parse_long(key, value);
                else if (key == "base_seed") config.base_seed = std::stoull(value);
                else if (key == "output_dir") config.output_dir = value;
                else if (key == "refset_size") config.refset_size = static_cast<int>(parse_long(key, value));
                else if (key == "baseline") config.baseline = value;
                else throw ConfigError("config line " + std::to_string(line_no) +
                                       ": unknown key " + key);
                break;
            case Section::kProblem:
                if (key == "name") config.problems.back().name = value;
                else if (key == "dimension") config.problems.back().dimension = static_cast<int>(parse_long(key, value));
                else throw ConfigError("config line " + std::to_string(line_no) +
                                       ": unknown problem key " + key);
                break;
            case Section::kAlgorithm:
                if (key == "name") config.algorithms.back().id = value;
                else if (key == "label") config.algorithms.back().label = value;
                else if (key == "mu") config.algorithms.back().mu = static_cast<int>(parse_long(key, value));
                else if (key == "neighborhood") config.algorithms.back().neighborhood = static_cast<int>(parse_long(key, value));
                else if (key == "theta") config.algorithms.back().theta = parse_double(key, value);
                else throw ConfigError("config line " + std::to_string(line_no) +
                                       ": unknown algorithm key " + key);
                break;
            case Section::kSweep:
                if (key == "mu") {
                    std::string list = value;
                    std::replace(list.begin(), list.end(), ',', ' ');
                    std::istringstream ls(list);
                    int m = 0;
                    while (ls >> m) config.mu_sweep.push_back(m);
                } else {
                    throw ConfigError("config line " + std::to_string(line_no) +
                                      ": unknown sweep key " + key);
                }
                break;
        }
    }
    for (auto& a : config.algorithms) {
        if (a.label.empty()) a.label = a.id;
    }
    return config;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config: " + path);
    return parse_experiment_config(in);
}

std::vector<AlgorithmSpec> resolve_algorithms(const ExperimentConfig& config) {
    std::vector<AlgorithmSpec> out;
    for (const auto& a : config.algorithms) {
        AlgorithmSpec base = a;
        if (base.label.empty()) base.label = base.id;
        const bool sweepable = base.id.rfind("moeadmm", 0) == 0;
        if (config.mu_sweep.empty() || !sweepable) {
            out.push_back(std::move(base));
            continue;
        }
        for (int m : config.mu_sweep) {
            AlgorithmSpec v = base;
            v.mu = m;
            v.label = base.label + "-mu" + std::to_string(m);
            out.push_back(std::move(v));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Algorithm registry

bool algorithm_known(const std::string& id) {
    return id == "moeadmm-tch" || id == "moeadmm-pbi" || id == "moead-tch" ||
           id == "moead-pbi" || id == "moead-ad";
}

std::vector<Solution> run_algorithm(const AlgorithmSpec& algorithm,
                                    const Problem& problem, int population,
                                    long budget, std::uint64_t seed) {
    if (algorithm.id == "moeadmm-tch" || algorithm.id == "moeadmm-pbi") {
        MoeadMmConfig c;
        c.population_size = population;
        c.mu = algorithm.mu;
        c.scalarizer = algorithm.id == "moeadmm-pbi" ? Scalarizer::kPbi
                                                     : Scalarizer::kTchebycheff;
        c.theta = algorithm.theta;
        c.budget = budget;
        c.seed = seed;
        return moeadmm_run(c, problem);
    }
    if (algorithm.id == "moead-tch" || algorithm.id == "moead-pbi") {
        MoeadConfig c;
        c.population_size = population;
        c.neighborhood = algorithm.neighborhood;
        c.scalarizer = algorithm.id == "moead-pbi" ? Scalarizer::kPbi
                                                   : Scalarizer::kTchebycheff;
        c.theta = algorithm.theta;
        c.budget = budget;
        c.seed = seed;
        return moead_run(c, problem);
    }
    if (algorithm.id == "moead-ad") {
        MoeadAdConfig c;
        c.lambda = population;
        c.scalarizer = Scalarizer::kTchebycheff;
        c.budget = budget;
        c.seed = seed;
        return moead_ad_run(c, problem);
    }
    throw ConfigError("unknown algorithm id: " + algorithm.id);
}

// ---------------------------------------------------------------------------
// Experiment execution

void write_archive(const std::string& path, const std::vector<Solution>& archive,
                   const ProblemDescriptor& descriptor) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write archive: " + path);
    out << "# problem=" << descriptor.name << " n=" << archive.size()
        << " d=" << descriptor.num_variables << " m=" << descriptor.num_objectives
        << "\n";
    for (const auto& s : archive) {
        bool first = true;
        for (double v : s.x) {
            if (!first) out << ' ';
            out << format_g17(v);
            first = false;
        }
        for (double v : s.f) {
            out << ' ' << format_g17(v);
        }
        out << "\n";
    }
    if (!out) throw ConfigError("write failed: " + path);
}

std::vector<Solution> read_archive(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read archive: " + path);
    std::string header;
    std::getline(in, header);
    int d = 0, m = 0;
    {
        std::istringstream hs(header);
        std::string token;
        while (hs >> token) {
            auto eq = token.find('=');
            if (eq == std::string::npos) continue;
            std::string key = token.substr(0, eq);
            if (key == "#") continue;
            std::string value = token.substr(eq + 1);
            if (key == "d") d = std::stoi(value);
            else if (key == "m") m = std::stoi(value);
        }
    }
    if (d <= 0 || m <= 0) throw ConfigError("malformed archive header: " + path);
    std::vector<Solution> archive;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        Solution s;
        s.x.resize(static_cast<std::size_t>(d));
        s.f.resize(static_cast<std::size_t>(m));
        for (double& v : s.x) ls >> v;
        for (double& v : s.f) ls >> v;
        if (!ls) throw ConfigError("malformed archive row: " + path);
        archive.push_back(std::move(s));
    }
    return archive;
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& config, int jobs,
                                      std::ostream* progress) {
    config.validate();
    const auto algorithms = resolve_algorithms(config);

    const fs::path out_dir(config.output_dir);
    fs::create_directories(out_dir / "refsets");
    fs::create_directories(out_dir / "records");
    fs::create_directories(out_dir / "archives");

    // Problems and reference sets are built once and shared read-only.
    std::vector<std::unique_ptr<Problem>> problems;
    std::vector<ReferenceSet> refsets;
    RandomStream seeder(config.base_seed);
    for (const auto& spec : config.problems) {
        auto problem = make_problem(spec.name, spec.dimension);
        const std::string& name = problem->descriptor().name;
        RandomStream stream = seeder.derive("refset/" + name);
        fs::path cache = out_dir / "refsets" /
                         (sanitize(name) + "-n" + std::to_string(config.refset_size) +
                          "-s" + std::to_string(stream.seed()) + ".txt");
        if (fs::exists(cache)) {
            refsets.push_back(read_reference_set(cache.string()));
        } else {
            ReferenceSet set =
                problem->sample_reference_set(config.refset_size, stream);
            write_reference_set(cache.string(), set, problem->descriptor());
            refsets.push_back(std::move(set));
        }
        problems.push_back(std::move(problem));
    }

    std::vector<Cell> cells;
    for (std::size_t p = 0; p < problems.size(); ++p) {
        for (std::size_t a = 0; a < algorithms.size(); ++a) {
            for (int r = 0; r < config.runs; ++r) cells.push_back({p, a, r});
        }
    }
    std::vector<RunRecord> records(cells.size());

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex log_mutex;
    std::string first_error;

    auto worker = [&]() {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= cells.size() || failed.load()) return;
            const Cell& cell = cells[c];
            const Problem& problem = *problems[cell.problem_index];
            const ReferenceSet& refset = refsets[cell.problem_index];
            const AlgorithmSpec& algorithm = algorithms[cell.algorithm_index];
            const std::string& problem_name = problem.descriptor().name;
            const std::string stem =
                cell_stem(problem_name, algorithm.label, cell.run);
            const fs::path record_path = out_dir / "records" / (stem + ".txt");
            const std::string archive_rel = "archives/" + stem + ".txt";
            const std::uint64_t seed =
                config.base_seed + static_cast<std::uint64_t>(cell.run);

            try {
                RunRecord record;
                bool reused = false;
                if (read_record_file(record_path, record) &&
                    record.problem == problem_name &&
                    record.algorithm == algorithm.label &&
                    record.run == cell.run && record.seed == seed &&
                    fs::exists(out_dir / record.archive_path)) {
                    reused = true;
                } else {
                    const auto t0 = std::chrono::steady_clock::now();
                    auto archive = run_algorithm(algorithm, problem,
                                                 config.population,
                                                 config.budget, seed);
                    const auto t1 = std::chrono::steady_clock::now();
                    record.problem = problem_name;
                    record.algorithm = algorithm.label;
                    record.run = cell.run;
                    record.seed = seed;
                    record.report = score_archive(archive, refset);
                    record.wall_seconds =
                        std::chrono::duration<double>(t1 - t0).count();
                    record.archive_path = archive_rel;
                    write_archive((out_dir / archive_rel).string(), archive,
                                  problem.descriptor());
                    write_record_file(record_path, record);
                }
                records[c] = std::move(record);
                if (progress) {
                    std::lock_guard<std::mutex> lock(log_mutex);
                    *progress << "[" << (c + 1) << "/" << cells.size() << "] "
                              << problem_name << " " << algorithm.label
                              << " run=" << cell.run
                              << (reused ? " (cached)" : "") << "\n";
                }
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(log_mutex);
                if (!failed.exchange(true)) {
                    first_error = std::string(e.what()) + " [cell " +
                                  problem_name + "/" + algorithm.label +
                                  "/run" + std::to_string(cell.run) + "]";
                }
                return;
            }
        }
    };

    const int worker_count =
        std::max(1, std::min<int>(jobs, static_cast<int>(cells.size())));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(worker_count));
    for (int t = 0; t < worker_count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failed.load()) throw ConfigError("experiment failed: " + first_error);
    return records;
}

std::vector<RunRecord> load_records(const ExperimentConfig& config) {
    config.validate();
    const auto algorithms = resolve_algorithms(config);
    const fs::path out_dir(config.output_dir);
    std::vector<RunRecord> records;
    std::string missing;
    for (const auto& spec : config.problems) {
        const std::string problem_name = problem_display_name(spec);
        for (const auto& algorithm : algorithms) {
            for (int r = 0; r < config.runs; ++r) {
                const std::string stem = cell_stem(problem_name, algorithm.label, r);
                RunRecord record;
                if (read_record_file(out_dir / "records" / (stem + ".txt"),
                                     record)) {
                    records.push_back(std::move(record));
                } else {
                    missing += "\n  " + problem_name + " / " + algorithm.label +
                               " / run" + std::to_string(r);
                }
            }
        }
    }
    if (!missing.empty()) {
        throw ConfigError("experiment incomplete, missing records:" + missing);
    }
    return records;
}

// ---------------------------------------------------------------------------
// Summary and export

StatsSummary summarize(const std::vector<RunRecord>& records,
                       const std::vector<std::string>& problems,
                       const std::vector<std::string>& algorithms,
                       const std::string& baseline) {
    StatsSummary summary;
    summary.problems = problems;
    summary.algorithms = algorithms;
    summary.baseline = baseline.empty() ? algorithms.front() : baseline;

    std::map<std::pair<std::string, std::string>, std::vector<const RunRecord*>>
        grouped;
    for (const auto& r : records) grouped[{r.problem, r.algorithm}].push_back(&r);

    // Every cell must hold the same number of runs.
    std::size_t expected = 0;
    std::string gaps;
    for (const auto& p : problems) {
        for (const auto& a : algorithms) {
            auto it = grouped.find({p, a});
            std::size_t have = it == grouped.end() ? 0 : it->second.size();
            if (expected == 0) expected = have;
            if (have != expected || have == 0) {
                gaps += "\n  " + p + " / " + a + ": " + std::to_string(have) +
                        " runs";
            }
        }
    }
    if (!gaps.empty()) {
        throw ConfigError("incomplete experiment, uneven cells:" + gaps);
    }

    auto values = [&](const std::string& p, const std::string& a, auto pick) {
        std::vector<double> v;
        for (const RunRecord* r : grouped[{p, a}]) v.push_back(pick(*r));
        return v;
    };
    auto igdp = [](const RunRecord& r) { return r.report.igd_plus; };
    auto igdx_of = [](const RunRecord& r) { return r.report.igdx; };
    auto hv_of = [](const RunRecord& r) { return r.report.hv; };

    for (const auto& p : problems) {
        for (const auto& a : algorithms) {
            CellStats cs;
            auto vp = values(p, a, igdp);
            auto vx = values(p, a, igdx_of);
            auto vh = values(p, a, hv_of);
            cs.run_count = static_cast<int>(vp.size());
            cs.mean_igd_plus = mean(vp);
            cs.median_igd_plus = median(vp);
            cs.std_igd_plus = sample_stddev(vp);
            cs.mean_igdx = mean(vx);
            cs.median_igdx = median(vx);
            cs.std_igdx = sample_stddev(vx);
            cs.mean_hv = mean(vh);
            cs.median_hv = median(vh);
            cs.std_hv = sample_stddev(vh);

            if (a != summary.baseline) {
                auto bp = values(p, summary.baseline, igdp);
                auto bx = values(p, summary.baseline, igdx_of);
                auto bh = values(p, summary.baseline, hv_of);
                auto mark = [](const std::vector<double>& algo,
                               const std::vector<double>& base,
                               bool lower_better) {
                    // Below 3 runs per side the two-sided rank-sum test can
                    // never reach p < 0.05, so skip it rather than reject.
                    if (algo.size() < 3 || base.size() < 3) return '=';
                    double p_value = wilcoxon_rank_sum(algo, base);
                    if (p_value >= 0.05) return '=';
                    double ma = median(algo), mb = median(base);
                    if (ma == mb) return '=';
                    bool algo_better = lower_better ? ma < mb : ma > mb;
                    return algo_better ? '+' : '-';
                };
                cs.mark_igd_plus = mark(vp, bp, true);
                cs.mark_igdx = mark(vx, bx, true);
                cs.mark_hv = mark(vh, bh, false);
            }
            summary.cells[{p, a}] = cs;
        }
    }

    // Best cell per problem row, by mean (the tables report means).
    for (const auto& p : problems) {
        const std::string* best_p = nullptr;
        const std::string* best_x = nullptr;
        const std::string* best_h = nullptr;
        for (const auto& a : algorithms) {
            const CellStats& cs = summary.cells[{p, a}];
            if (!best_p || cs.mean_igd_plus <
                               summary.cells[{p, *best_p}].mean_igd_plus) {
                best_p = &a;
            }
            if (!best_x || cs.mean_igdx < summary.cells[{p, *best_x}].mean_igdx) {
                best_x = &a;
            }
            if (!best_h || cs.mean_hv > summary.cells[{p, *best_h}].mean_hv) {
                best_h = &a;
            }
        }
        summary.cells[{p, *best_p}].best_igd_plus = true;
        summary.cells[{p, *best_x}].best_igdx = true;
        summary.cells[{p, *best_h}].best_hv = true;
    }
    return summary;
}

void export_results(const ExperimentConfig& config, const StatsSummary& summary,
                    const std::vector<RunRecord>& records) {
    const fs::path tables = fs::path(config.output_dir) / "tables";
    fs::create_directories(tables);

    // (a) one comparison table per indicator.
    struct TableSpec {
        const char* file;
        double CellStats::* mean;
        char CellStats::* mark;
        bool CellStats::* best;
    };
    const TableSpec specs[] = {
        {"igd_plus.txt", &CellStats::mean_igd_plus, &CellStats::mark_igd_plus,
         &CellStats::best_igd_plus},
        {"igdx.txt", &CellStats::mean_igdx, &CellStats::mark_igdx,
         &CellStats::best_igdx},
        {"hv.txt", &CellStats::mean_hv, &CellStats::mark_hv, &CellStats::best_hv},
    };
    for (const auto& ts : specs) {
        std::ofstream out(tables / ts.file);
        if (!out) throw ConfigError("cannot write table: " + std::string(ts.file));
        out << "# mean over runs; vs baseline=" << summary.baseline
            << ": + better, - worse, = no significant difference (rank-sum"
               " p<0.05); * best in row\n";
        out << "problem";
        for (const auto& a : summary.algorithms) out << "\t" << a;
        out << "\n";
        for (const auto& p : summary.problems) {
            out << p;
            for (const auto& a : summary.algorithms) {
                const CellStats& cs = summary.cells.at({p, a});
                out << "\t" << format_e4(cs.*(ts.mean)) << " " << cs.*(ts.mark)
                    << ((cs.*(ts.best)) ? "*" : "");
            }
            out << "\n";
        }
    }

    // (b) long-format per-run records, fixed order.
    std::vector<const RunRecord*> ordered;
    ordered.reserve(records.size());
    for (const auto& r : records) ordered.push_back(&r);
    auto rank_of = [](const std::vector<std::string>& order,
                      const std::string& value) {
        return std::find(order.begin(), order.end(), value) - order.begin();
    };
    std::sort(ordered.begin(), ordered.end(),
              [&](const RunRecord* a, const RunRecord* b) {
                  auto pa = rank_of(summary.problems, a->problem);
                  auto pb = rank_of(summary.problems, b->problem);
                  if (pa != pb) return pa < pb;
                  auto aa = rank_of(summary.algorithms, a->algorithm);
                  auto ab = rank_of(summary.algorithms, b->algorithm);
                  if (aa != ab) return aa < ab;
                  return a->run < b->run;
              });
    {
        std::ofstream out(tables / "records.txt");
        if (!out) throw ConfigError("cannot write records table");
        out << "problem\talgorithm\trun\tseed\tigd_plus\tigdx\thv\tarchive_size\n";
        for (const RunRecord* r : ordered) {
            out << r->problem << "\t" << r->algorithm << "\t" << r->run << "\t"
                << r->seed << "\t" << format_g17(r->report.igd_plus) << "\t"
                << format_g17(r->report.igdx) << "\t" << format_g17(r->report.hv)
                << "\t" << r->report.archive_size << "\n";
        }
    }

    // (c) visualization-run selection per cell: median HV run (primary) and
    // median IGDX run (alternative).
    {
        std::map<std::pair<std::string, std::string>,
                 std::vector<const RunRecord*>> grouped;
        for (const RunRecord* r : ordered) {
            grouped[{r->problem, r->algorithm}].push_back(r);
        }
        std::ofstream out(tables / "viz_selection.txt");
        if (!out) throw ConfigError("cannot write viz selection");
        out << "problem\talgorithm\tmedian_hv_run\tmedian_hv_archive"
               "\tmedian_igdx_run\tmedian_igdx_archive\n";
        for (const auto& p : summary.problems) {
            for (const auto& a : summary.algorithms) {
                const auto& cell = grouped[{p, a}];
                const RunRecord* by_hv = median_record(
                    cell, [](const RunRecord& r) { return r.report.hv; });
                const RunRecord* by_igdx = median_record(
                    cell, [](const RunRecord& r) { return r.report.igdx; });
                out << p << "\t" << a << "\t" << by_hv->run << "\t"
                    << by_hv->archive_path << "\t" << by_igdx->run << "\t"
                    << by_igdx->archive_path << "\n";
            }
        }
    }

    // (d) mu-sweep curves, one file per problem.
    if (!config.mu_sweep.empty()) {
        std::vector<const AlgorithmSpec*> families;
        for (const auto& a : config.algorithms) {
            if (a.id.rfind("moeadmm", 0) == 0) families.push_back(&a);
        }
        for (const auto& p : summary.problems) {
            std::ofstream out(tables / ("sweep_" + sanitize(p) + ".txt"));
            if (!out) throw ConfigError("cannot write sweep table");
            out << "mu";
            for (const auto* f : families) {
                std::string base = f->label.empty() ? f->id : f->label;
                out << "\t" << base << ":igdx_median\t" << base
                    << ":igd_plus_median";
            }
            out << "\n";
            for (int m : config.mu_sweep) {
                out << m;
                for (const auto* f : families) {
                    std::string base = f->label.empty() ? f->id : f->label;
                    const CellStats& cs =
                        summary.cells.at({p, base + "-mu" + std::to_string(m)});
                    out << "\t" << format_g17(cs.median_igdx) << "\t"
                        << format_g17(cs.median_igd_plus);
                }
                out << "\n";
            }
        }
    }
}

} // namespace momm
