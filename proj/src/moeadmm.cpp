#include "momm/moeadmm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace momm {

void MoeadMmConfig::validate() const {
    if (mu < 1) throw ConfigError("moeadmm: mu must be at least 1");
    if (population_size < mu) throw ConfigError("moeadmm: N below mu");
    if (population_size / mu < 2) {
        throw ConfigError("moeadmm: need at least 2 weight vectors (N/mu >= 2)");
    }
    if (budget < population_size) {
        throw ConfigError("moeadmm: budget below population size");
    }
    if (theta <= 0.0) throw ConfigError("moeadmm: theta must be positive");
    variation.validate();
}

int moeadmm_lambda(const MoeadMmConfig& config) {
    return config.population_size / config.mu;
}

int moeadmm_neighborhood_size(int lambda) {
    return std::max(1, lambda / 10);
}

MoeadMmState moeadmm_initialize(const MoeadMmConfig& config,
                                const Problem& problem) {
    config.validate();
    const auto& desc = problem.descriptor();
    const int lambda = moeadmm_lambda(config);

    MoeadMmState state{.weights = generate_weights(desc.num_objectives, lambda),
                       .neighbors = {},
                       .subpops = {},
                       .z = {},
                       .evaluations_used = 0,
                       .sigma = 0.0,
                       .rng = RandomStream(config.seed)};
    state.neighbors =
        all_neighbor_indices(state.weights, moeadmm_neighborhood_size(lambda));

    state.z.assign(static_cast<std::size_t>(desc.num_objectives),
                   std::numeric_limits<double>::infinity());
    state.subpops.resize(static_cast<std::size_t>(lambda));
    for (int i = 0; i < lambda; ++i) {
        auto& pop = state.subpops[static_cast<std::size_t>(i)];
        pop.owner = i;
        pop.members.reserve(static_cast<std::size_t>(config.mu));
        for (int j = 0; j < config.mu; ++j) {
            DecisionVector x(static_cast<std::size_t>(desc.num_variables));
            for (std::size_t d = 0; d < x.size(); ++d) {
                x[d] = state.rng.uniform(desc.bounds[d].low, desc.bounds[d].high);
            }
            Solution s{std::move(x), {}};
            s.f = problem.evaluate(s.x);
            ++state.evaluations_used;
            state.z = update_ideal(std::move(state.z), s.f);
            pop.members.push_back(std::move(s));
        }
    }
    return state;
}

double estimate_clearing_radius(const std::vector<const Solution*>& all_solutions,
                                int population_size) {
    const std::size_t n = all_solutions.size();
    if (n < 2) {
        throw ContractViolation("estimate_clearing_radius: need at least 2 points");
    }
    const std::size_t ell = std::min(
        n - 1, static_cast<std::size_t>(std::max(1, population_size / 10)));
    std::vector<double> dist2(n - 1);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t k = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            dist2[k++] = squared_distance(all_solutions[i]->x, all_solutions[j]->x);
        }
        std::nth_element(dist2.begin(),
                         dist2.begin() + static_cast<std::ptrdiff_t>(ell - 1),
                         dist2.end());
        total += std::sqrt(dist2[ell - 1]);
    }
    return total / static_cast<double>(n);
}

Solution moeadmm_mating(MoeadMmState& state, const MoeadMmConfig& config,
                        const Problem& problem, int i) {
    const auto& mine = state.subpops[static_cast<std::size_t>(i)].members;
    const auto& nbrs = state.neighbors[static_cast<std::size_t>(i)];
    const std::size_t mu = mine.size();

    const Solution& x1 = mine[state.rng.next_index(mu)];
    // B is the union of the T neighbor sub-populations, each of size mu;
    // one flat index draws uniformly from it.
    const std::size_t flat = state.rng.next_index(nbrs.size() * mu);
    const Solution& x2 =
        state.subpops[static_cast<std::size_t>(nbrs[flat / mu])].members[flat % mu];

    const auto& bounds = problem.descriptor().bounds;
    DecisionVector child =
        sbx_crossover(x1.x, x2.x, config.variation, bounds, state.rng);
    child = polynomial_mutation(std::move(child), config.variation, bounds,
                                state.rng);
    Solution y{std::move(child), {}};
    y.f = problem.evaluate(y.x);
    ++state.evaluations_used;
    return y;
}

std::vector<Solution> environmental_selection(const WeightVector& w,
                                              std::vector<Solution> candidates,
                                              double sigma, const IdealPoint& z,
                                              Scalarizer scalarizer, double theta) {
    const std::size_t n = candidates.size();
    if (n < 2) {
        throw ContractViolation("environmental_selection: need mu+1 >= 2 candidates");
    }
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) {
        g[i] = scalarize(scalarizer, w, candidates[i].f, z, theta);
    }

    // Closest pair, ties to the lexicographically smallest index pair.
    std::size_t pa = 0, pb = 1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double d = euclidean_distance(candidates[i].x, candidates[j].x);
            if (d < best) {
                best = d;
                pa = i;
                pb = j;
            }
        }
    }

    std::size_t removed;
    if (best < sigma) {
        // Clearing: the worse of the crowded pair goes. Equal G keeps the
        // lower index, so an offspring appended last never displaces an
        // incumbent it merely ties.
        removed = g[pb] >= g[pa] ? pb : pa;
    } else {
        removed = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (g[i] >= g[removed]) removed = i;
        }
    }
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(removed));
    return candidates;
}

void moeadmm_step(MoeadMmState& state, const MoeadMmConfig& config,
                  const Problem& problem, std::optional<double> forced_sigma) {
    if (forced_sigma) {
        state.sigma = *forced_sigma;
    } else {
        std::vector<const Solution*> all;
        all.reserve(state.subpops.size() *
                    static_cast<std::size_t>(config.mu));
        for (const auto& pop : state.subpops) {
            for (const auto& s : pop.members) all.push_back(&s);
        }
        state.sigma = estimate_clearing_radius(all, config.population_size);
    }

    const int lambda = static_cast<int>(state.weights.size());
    for (int i = 0; i < lambda; ++i) {
        if (state.evaluations_used >= config.budget) return;
        Solution y = moeadmm_mating(state, config, problem, i);
        state.z = update_ideal(std::move(state.z), y.f);
        auto& pop = state.subpops[static_cast<std::size_t>(i)];
        std::vector<Solution> s = std::move(pop.members);
        s.push_back(std::move(y));
        pop.members = environmental_selection(
            state.weights[static_cast<std::size_t>(i)], std::move(s), state.sigma,
            state.z, config.scalarizer, config.theta);
    }
}

std::vector<Solution> moeadmm_run(const MoeadMmConfig& config,
                                  const Problem& problem,
                                  const GenerationCallback& on_generation) {
    MoeadMmState state = moeadmm_initialize(config, problem);
    while (state.evaluations_used < config.budget) {
        moeadmm_step(state, config, problem);
        if (on_generation) on_generation(state);
    }
    std::vector<Solution> all;
    all.reserve(state.subpops.size() * static_cast<std::size_t>(config.mu));
    for (const auto& pop : state.subpops) {
        for (const auto& s : pop.members) all.push_back(s);
    }
    return nondominated_filter(all);
}

} // namespace momm
