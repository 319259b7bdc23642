#ifndef MOMM_INDICATORS_HPP
#define MOMM_INDICATORS_HPP

#include <vector>

#include "momm/core.hpp"
#include "momm/problems.hpp"

namespace momm {

struct IndicatorReport {
    double igd_plus = 0.0;
    double igdx = 0.0;
    double hv = 0.0;
    int archive_size = 0;
};

/// Mean over p in P of the smallest dominance-aware distance
/// d+(p, a) = sqrt(sum_i max(a_i - p_i, 0)^2) to the archive A. Zero when
/// every reference point is weakly dominated by some archive point.
double igd_plus(const std::vector<ObjectiveVector>& archive,
                const std::vector<ObjectiveVector>& reference_front);

/// Decision-space coverage: mean over s in S of the smallest Euclidean
/// distance to the archive.
double igdx(const std::vector<DecisionVector>& archive,
            const std::vector<DecisionVector>& reference_set);

/// Hypervolume dominated by A relative to ref. Exact sweep for two
/// objectives; fixed-seed Monte-Carlo estimate (1e6 samples) for three or
/// more. Points not strictly better than ref in every component are
/// clipped out.
double hypervolume(const std::vector<ObjectiveVector>& archive,
                   const ObjectiveVector& ref);

/// Componentwise max of the reference front plus a 0.1 margin.
ObjectiveVector hv_reference_point(const std::vector<ObjectiveVector>& reference_front);

/// All three indicators of an archive against a problem's reference set.
IndicatorReport score_archive(const std::vector<Solution>& archive,
                              const ReferenceSet& reference);

} // namespace momm

#endif // MOMM_INDICATORS_HPP
