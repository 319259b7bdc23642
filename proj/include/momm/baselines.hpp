#ifndef MOMM_BASELINES_HPP
#define MOMM_BASELINES_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "momm/core.hpp"
#include "momm/problems.hpp"
#include "momm/scalarize.hpp"
#include "momm/variation.hpp"

namespace momm {

// ---------------------------------------------------------------------------
// Classic decomposition baseline: one solution per weight vector, parents
// from the T-neighborhood, offspring replaces every neighborhood incumbent
// it beats on that incumbent's own scalarizer.

struct MoeadConfig {
    int population_size = 300; ///< one weight vector per solution
    int neighborhood = 20;     ///< T, clamped to the population size
    Scalarizer scalarizer = Scalarizer::kTchebycheff;
    double theta = kDefaultPbiTheta;
    long budget = 100000;
    std::uint64_t seed = 1;
    VariationParams variation;

    void validate() const;
};

struct MoeadState {
    std::vector<WeightVector> weights;
    std::vector<std::vector<int>> mating_pool; ///< B(i), self included
    std::vector<Solution> population;          ///< population[i] serves weight i
    IdealPoint z;
    long evaluations_used = 0;
    RandomStream rng;
};

MoeadState moead_initialize(const MoeadConfig& config, const Problem& problem);

/// One pass over all weights; stops mid-pass when the budget runs out.
void moead_step(MoeadState& state, const MoeadConfig& config,
                const Problem& problem);

using MoeadGenerationCallback = std::function<void(const MoeadState&)>;

std::vector<Solution> moead_run(const MoeadConfig& config, const Problem& problem,
                                const MoeadGenerationCallback& on_generation = nullptr);

// ---------------------------------------------------------------------------
// Adaptive-assignment baseline with an unbounded population: each offspring
// is assigned to the weight whose direction it matches best, and competes
// only against assigned solutions among its L nearest neighbors.

struct MoeadAdConfig {
    int lambda = 300; ///< weight vector count (also initial population size)
    Scalarizer scalarizer = Scalarizer::kTchebycheff;
    double theta = kDefaultPbiTheta;
    long budget = 100000;
    std::uint64_t seed = 1;
    VariationParams variation;

    void validate() const;
};

/// Outcome of one offspring's acceptance test given the scalarizer values
/// of the members of P_i that fall among the offspring's L nearest
/// neighbors. Pure rule, exposed for replay checks.
struct AdDecision {
    bool accept = false;
    std::vector<std::size_t> removed; ///< indices into the intersection list
};

/// Accept iff the intersection is empty or the offspring strictly beats at
/// least one intersecting member; every strictly worse member is removed.
AdDecision moead_ad_decide(double g_offspring,
                           const std::vector<double>& g_intersection);

/// Per-iteration trace: the decision inputs and the applied outcome.
struct AdIterationLog {
    int assigned_weight = 0;
    double g_offspring = 0.0;
    std::vector<double> g_intersection;
    bool accepted = false;
    std::size_t removals = 0;
    std::size_t population_size = 0; ///< after the update
};

using AdIterationCallback = std::function<void(const AdIterationLog&)>;

std::vector<Solution> moead_ad_run(const MoeadAdConfig& config,
                                   const Problem& problem,
                                   const AdIterationCallback& on_iteration = nullptr);

} // namespace momm

#endif // MOMM_BASELINES_HPP
