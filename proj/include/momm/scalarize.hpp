#ifndef MOMM_SCALARIZE_HPP
#define MOMM_SCALARIZE_HPP

#include <vector>

#include "momm/core.hpp"

namespace momm {

/// Nonnegative weights of length M summing to one.
using WeightVector = std::vector<double>;

/// Componentwise minimum of every objective value seen so far in a run.
using IdealPoint = std::vector<double>;

enum class Scalarizer {
    kTchebycheff,
    kPbi,
};

/// Default PBI penalty.
inline constexpr double kDefaultPbiTheta = 5.0;

/// Generates exactly `lambda` weight vectors on the M-simplex.
///
/// M = 2 uses the evenly spaced sequence (1 - i/(lambda-1), i/(lambda-1)).
/// M > 2 uses the simplex lattice with the largest H such that
/// C(H+M-1, M-1) <= lambda, topped up to lambda with uniform simplex
/// points drawn from a fixed-seed stream so the set depends only on
/// (M, lambda). No duplicates are produced.
std::vector<WeightVector> generate_weights(int num_objectives, int lambda);

/// Weighted Tchebycheff value max_i w_i |f_i - z_i|. Zero weights are
/// clamped to 1e-6 so boundary weights never ignore an objective.
double tchebycheff(const WeightVector& w, const ObjectiveVector& f,
                   const IdealPoint& z);

/// Penalty boundary intersection: d1 + theta * d2 along the normalized
/// weight direction.
double pbi(const WeightVector& w, const ObjectiveVector& f,
           const IdealPoint& z, double theta = kDefaultPbiTheta);

double scalarize(Scalarizer s, const WeightVector& w, const ObjectiveVector& f,
                 const IdealPoint& z, double theta = kDefaultPbiTheta);

/// Componentwise minimum of z and f.
IdealPoint update_ideal(IdealPoint z, const ObjectiveVector& f);

/// Indices of the T weight vectors closest to weights[i] in weight space,
/// self excluded, ties broken by lower index. Deterministic.
std::vector<int> neighbor_indices(const std::vector<WeightVector>& weights,
                                  int i, int neighborhood_size);

/// neighbor_indices for every weight at once.
std::vector<std::vector<int>> all_neighbor_indices(
    const std::vector<WeightVector>& weights, int neighborhood_size);

} // namespace momm

#endif // MOMM_SCALARIZE_HPP
