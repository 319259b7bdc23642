#ifndef MOMM_STATS_HPP
#define MOMM_STATS_HPP

#include <vector>

#include "momm/core.hpp"

namespace momm {

/// Two-sided Mann-Whitney / Wilcoxon rank-sum p-value with midranks.
/// Exact permutation enumeration when |a| + |b| <= 12; otherwise the
/// normal approximation with tie correction and 0.5 continuity
/// correction. An all-equal pooled sample yields p = 1.
double wilcoxon_rank_sum(const std::vector<double>& a,
                         const std::vector<double>& b);

double mean(const std::vector<double>& v);
double median(std::vector<double> v);
/// Sample standard deviation (n - 1 denominator); 0 for fewer than 2 values.
double sample_stddev(const std::vector<double>& v);

} // namespace momm

#endif // MOMM_STATS_HPP
