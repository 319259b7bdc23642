#include "momm/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace momm {

// ---------------------------------------------------------------------------
// Classic MOEA/D

void MoeadConfig::validate() const {
    if (population_size < 1) throw ConfigError("moead: population must be >= 1");
    if (neighborhood < 2) throw ConfigError("moead: neighborhood must be >= 2");
    if (budget < population_size) throw ConfigError("moead: budget below population");
    if (theta <= 0.0) throw ConfigError("moead: theta must be positive");
    variation.validate();
}

MoeadState moead_initialize(const MoeadConfig& config, const Problem& problem) {
    config.validate();
    const auto& desc = problem.descriptor();
    const int n = config.population_size;

    MoeadState state{.weights = generate_weights(desc.num_objectives, n),
                     .mating_pool = {},
                     .population = {},
                     .z = IdealPoint(static_cast<std::size_t>(desc.num_objectives),
                                     std::numeric_limits<double>::infinity()),
                     .evaluations_used = 0,
                     .rng = RandomStream(config.seed)};

    // B(i) holds the T weights closest to w_i; w_i is closest to itself, so
    // B(i) = {i} plus the T-1 nearest others. T is clamped for tiny N.
    const int t = std::min(config.neighborhood, n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> pool{i};
        auto others = neighbor_indices(state.weights, i, t - 1);
        pool.insert(pool.end(), others.begin(), others.end());
        state.mating_pool.push_back(std::move(pool));
    }

    state.population.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        DecisionVector x(static_cast<std::size_t>(desc.num_variables));
        for (std::size_t d = 0; d < x.size(); ++d) {
            x[d] = state.rng.uniform(desc.bounds[d].low, desc.bounds[d].high);
        }
        Solution s{std::move(x), {}};
        s.f = problem.evaluate(s.x);
        ++state.evaluations_used;
        state.z = update_ideal(std::move(state.z), s.f);
        state.population.push_back(std::move(s));
    }
    return state;
}

void moead_step(MoeadState& state, const MoeadConfig& config,
                const Problem& problem) {
    const auto& bounds = problem.descriptor().bounds;
    const int n = static_cast<int>(state.weights.size());
    for (int i = 0; i < n; ++i) {
        if (state.evaluations_used >= config.budget) return;
        const auto& pool = state.mating_pool[static_cast<std::size_t>(i)];
        const Solution& p1 =
            state.population[static_cast<std::size_t>(
                pool[state.rng.next_index(pool.size())])];
        const Solution& p2 =
            state.population[static_cast<std::size_t>(
                pool[state.rng.next_index(pool.size())])];
        DecisionVector child =
            sbx_crossover(p1.x, p2.x, config.variation, bounds, state.rng);
        child = polynomial_mutation(std::move(child), config.variation, bounds,
                                    state.rng);
        Solution y{std::move(child), {}};
        y.f = problem.evaluate(y.x);
        ++state.evaluations_used;
        state.z = update_ideal(std::move(state.z), y.f);

        // Unbounded neighborhood replacement: y takes every slot it beats.
        for (int j : pool) {
            const auto& w = state.weights[static_cast<std::size_t>(j)];
            Solution& incumbent = state.population[static_cast<std::size_t>(j)];
            double g_new = scalarize(config.scalarizer, w, y.f, state.z,
                                     config.theta);
            double g_old = scalarize(config.scalarizer, w, incumbent.f, state.z,
                                     config.theta);
            if (g_new <= g_old) incumbent = y;
        }
    }
}

std::vector<Solution> moead_run(const MoeadConfig& config, const Problem& problem,
                                const MoeadGenerationCallback& on_generation) {
    MoeadState state = moead_initialize(config, problem);
    while (state.evaluations_used < config.budget) {
        moead_step(state, config, problem);
        if (on_generation) on_generation(state);
    }
    return nondominated_filter(state.population);
}

// ---------------------------------------------------------------------------
// MOEA/D-AD

void MoeadAdConfig::validate() const {
    if (lambda < 2) throw ConfigError("moead-ad: need at least 2 weight vectors");
    if (budget < lambda) throw ConfigError("moead-ad: budget below weight count");
    if (theta <= 0.0) throw ConfigError("moead-ad: theta must be positive");
    variation.validate();
}

AdDecision moead_ad_decide(double g_offspring,
                           const std::vector<double>& g_intersection) {
    AdDecision d;
    if (g_intersection.empty()) {
        d.accept = true;
        return d;
    }
    for (std::size_t k = 0; k < g_intersection.size(); ++k) {
        if (g_offspring < g_intersection[k]) d.removed.push_back(k);
    }
    d.accept = !d.removed.empty();
    if (!d.accept) d.removed.clear();
    return d;
}

namespace {

struct AdMember {
    Solution solution;
    int weight = 0;
};

// Index of the weight whose direction matches u = f - z best (largest
// cosine); ties go to the lower index. A zero u matches every weight
// equally and lands on index 0.
int closest_weight(const std::vector<WeightVector>& weights,
                   const std::vector<double>& norms, const ObjectiveVector& f,
                   const IdealPoint& z) {
    double best = -std::numeric_limits<double>::infinity();
    int best_index = 0;
    double u_norm = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        u_norm += (f[i] - z[i]) * (f[i] - z[i]);
    }
    if (u_norm <= 0.0) return 0;
    for (int j = 0; j < static_cast<int>(weights.size()); ++j) {
        const auto& w = weights[static_cast<std::size_t>(j)];
        double dot = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            dot += (f[i] - z[i]) * w[i];
        }
        double cosine = dot / norms[static_cast<std::size_t>(j)];
        if (cosine > best) {
            best = cosine;
            best_index = j;
        }
    }
    return best_index;
}

} // namespace

std::vector<Solution> moead_ad_run(const MoeadAdConfig& config,
                                   const Problem& problem,
                                   const AdIterationCallback& on_iteration) {
    config.validate();
    const auto& desc = problem.descriptor();
    const auto& bounds = desc.bounds;

    auto weights = generate_weights(desc.num_objectives, config.lambda);
    std::vector<double> weight_norms;
    weight_norms.reserve(weights.size());
    for (const auto& w : weights) {
        double n2 = 0.0;
        for (double v : w) n2 += v * v;
        weight_norms.push_back(std::sqrt(n2));
    }

    RandomStream rng(config.seed);
    IdealPoint z(static_cast<std::size_t>(desc.num_objectives),
                 std::numeric_limits<double>::infinity());
    long evaluations = 0;

    std::vector<AdMember> population;
    population.reserve(static_cast<std::size_t>(config.lambda) * 2);
    for (int i = 0; i < config.lambda; ++i) {
        DecisionVector x(static_cast<std::size_t>(desc.num_variables));
        for (std::size_t d = 0; d < x.size(); ++d) {
            x[d] = rng.uniform(bounds[d].low, bounds[d].high);
        }
        Solution s{std::move(x), {}};
        s.f = problem.evaluate(s.x);
        ++evaluations;
        z = update_ideal(std::move(z), s.f);
        population.push_back({std::move(s), 0});
    }
    // Initial weight assignment happens after z settles so every member
    // uses the same ideal point.
    for (auto& m : population) {
        m.weight = closest_weight(weights, weight_norms, m.solution.f, z);
    }

    while (evaluations < config.budget) {
        const Solution& p1 = population[rng.next_index(population.size())].solution;
        const Solution& p2 = population[rng.next_index(population.size())].solution;
        DecisionVector child =
            sbx_crossover(p1.x, p2.x, config.variation, bounds, rng);
        child = polynomial_mutation(std::move(child), config.variation, bounds, rng);
        Solution y{std::move(child), {}};
        y.f = problem.evaluate(y.x);
        ++evaluations;
        z = update_ideal(std::move(z), y.f);

        const int wi = closest_weight(weights, weight_norms, y.f, z);
        const auto& w = weights[static_cast<std::size_t>(wi)];

        // Q: the L nearest members to y in decision space; ties by index.
        const std::size_t ell = std::max<std::size_t>(1, population.size() / 10);
        std::vector<std::pair<double, std::size_t>> by_distance;
        by_distance.reserve(population.size());
        for (std::size_t k = 0; k < population.size(); ++k) {
            by_distance.emplace_back(
                squared_distance(population[k].solution.x, y.x), k);
        }
        std::partial_sort(by_distance.begin(),
                          by_distance.begin() +
                              static_cast<std::ptrdiff_t>(
                                  std::min(ell, by_distance.size())),
                          by_distance.end());

        // Members of P_wi among Q, with their scalarizer values.
        std::vector<std::size_t> intersection;
        std::vector<double> g_intersection;
        for (std::size_t q = 0; q < std::min(ell, by_distance.size()); ++q) {
            std::size_t k = by_distance[q].second;
            if (population[k].weight == wi) {
                intersection.push_back(k);
                g_intersection.push_back(scalarize(
                    config.scalarizer, w, population[k].solution.f, z,
                    config.theta));
            }
        }
        const double g_y = scalarize(config.scalarizer, w, y.f, z, config.theta);
        AdDecision decision = moead_ad_decide(g_y, g_intersection);

        if (decision.accept) {
            // Erase from the back so earlier indices stay valid.
            std::vector<std::size_t> to_remove;
            to_remove.reserve(decision.removed.size());
            for (std::size_t r : decision.removed) {
                to_remove.push_back(intersection[r]);
            }
            std::sort(to_remove.begin(), to_remove.end(),
                      std::greater<std::size_t>());
            for (std::size_t k : to_remove) {
                population.erase(population.begin() +
                                 static_cast<std::ptrdiff_t>(k));
            }
            population.push_back({std::move(y), wi});
        }

        if (on_iteration) {
            AdIterationLog log;
            log.assigned_weight = wi;
            log.g_offspring = g_y;
            log.g_intersection = g_intersection;
            log.accepted = decision.accept;
            log.removals = decision.removed.size();
            log.population_size = population.size();
            on_iteration(log);
        }
    }

    std::vector<Solution> archive;
    archive.reserve(population.size());
    for (auto& m : population) archive.push_back(std::move(m.solution));
    return nondominated_filter(archive);
}

} // namespace momm
