#ifndef MOMM_VARIATION_HPP
#define MOMM_VARIATION_HPP

#include "momm/core.hpp"

namespace momm {

struct VariationParams {
    double sbx_eta = 20.0;  ///< crossover distribution index
    double sbx_prob = 1.0;  ///< probability the crossover fires at all
    double mut_eta = 20.0;  ///< mutation distribution index
    double mut_prob = -1.0; ///< per-variable rate; < 0 means 1/D at use site

    /// Throws ConfigError on nonsensical values. mut_prob = 0 is legal and
    /// turns mutation off entirely.
    void validate() const;

    double effective_mut_prob(std::size_t num_variables) const;
};

/// Simulated binary crossover, one child kept. Each variable participates
/// with probability 0.5; participating variables draw a spread factor from
/// the bounded SBX distribution and a coin flip picks which of the two
/// children contributes the coordinate. Non-participating variables copy x1.
DecisionVector sbx_crossover(const DecisionVector& x1, const DecisionVector& x2,
                             const VariationParams& params, const Bounds& bounds,
                             RandomStream& rng);

/// Bounded polynomial mutation; each variable mutates with probability
/// params.effective_mut_prob(D).
DecisionVector polynomial_mutation(DecisionVector x, const VariationParams& params,
                                   const Bounds& bounds, RandomStream& rng);

} // namespace momm

#endif // MOMM_VARIATION_HPP
