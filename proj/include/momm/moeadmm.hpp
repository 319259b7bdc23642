#ifndef MOMM_MOEADMM_HPP
#define MOMM_MOEADMM_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "momm/core.hpp"
#include "momm/problems.hpp"
#include "momm/scalarize.hpp"
#include "momm/variation.hpp"

namespace momm {

struct MoeadMmConfig {
    int population_size = 300; ///< N; effective population is lambda * mu
    int mu = 4;                ///< solutions per weight vector
    Scalarizer scalarizer = Scalarizer::kTchebycheff;
    double theta = kDefaultPbiTheta;
    long budget = 100000; ///< max evaluations, initialization included
    std::uint64_t seed = 1;
    VariationParams variation;

    void validate() const;
};

/// The mu solutions attached to one weight vector. Holds mu members at
/// every generation boundary; mu+1 only transiently inside one update.
struct SubPopulation {
    int owner = 0;
    std::vector<Solution> members;
};

struct MoeadMmState {
    std::vector<WeightVector> weights;
    std::vector<std::vector<int>> neighbors; ///< T nearest weights per index
    std::vector<SubPopulation> subpops;
    IdealPoint z;
    long evaluations_used = 0;
    double sigma = 0.0;
    RandomStream rng;
};

/// Builds the initial state: lambda = floor(N/mu) weights, lambda * mu
/// uniform random solutions, z = componentwise minimum, T = max(1,
/// floor(lambda/10)). Consumes lambda * mu evaluations.
MoeadMmState moeadmm_initialize(const MoeadMmConfig& config, const Problem& problem);

/// Mean distance of each solution to its L-th nearest other solution in
/// decision space, L = max(1, floor(N/10)). N is the configured population
/// size, not the solution count.
double estimate_clearing_radius(const std::vector<const Solution*>& all_solutions,
                                int population_size);

/// One offspring for weight i: x1 uniform from P_i, x2 uniform from the
/// union of the T neighboring sub-populations, SBX + polynomial mutation,
/// clamped and evaluated. Consumes one evaluation.
Solution moeadmm_mating(MoeadMmState& state, const MoeadMmConfig& config,
                        const Problem& problem, int i);

/// Drops one of the mu+1 candidates: the worse-G member of the closest
/// decision-space pair when that pair is closer than sigma, otherwise the
/// globally worst-G candidate. Survivors keep their original order.
std::vector<Solution> environmental_selection(const WeightVector& w,
                                              std::vector<Solution> candidates,
                                              double sigma, const IdealPoint& z,
                                              Scalarizer scalarizer, double theta);

/// One generation: recompute sigma once, then one (mu+1) update per weight
/// in index order. Stops mid-generation when the budget runs out.
/// forced_sigma overrides the estimate (test seam for degenerate cases).
void moeadmm_step(MoeadMmState& state, const MoeadMmConfig& config,
                  const Problem& problem,
                  std::optional<double> forced_sigma = std::nullopt);

/// Per-generation observer; called after each generation with the state.
using GenerationCallback = std::function<void(const MoeadMmState&)>;

/// Full run: initialize, iterate generations until the budget is spent,
/// return the nondominated members of the union of all sub-populations.
std::vector<Solution> moeadmm_run(const MoeadMmConfig& config, const Problem& problem,
                                  const GenerationCallback& on_generation = nullptr);

/// Number of weight vectors for a config.
int moeadmm_lambda(const MoeadMmConfig& config);

/// Neighborhood size T = max(1, floor(lambda/10)).
int moeadmm_neighborhood_size(int lambda);

} // namespace momm

#endif // MOMM_MOEADMM_HPP
