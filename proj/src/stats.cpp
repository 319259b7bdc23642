#include "momm/stats.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>

namespace momm {

namespace {

// Midranks of the pooled sample; ties share the average of their ranks.
std::vector<double> midranks(const std::vector<double>& pooled) {
    const std::size_t n = pooled.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return pooled[i] < pooled[j]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) ++j;
        double shared = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
        i = j + 1;
    }
    return ranks;
}

} // namespace

double wilcoxon_rank_sum(const std::vector<double>& a,
                         const std::vector<double>& b) {
    if (a.size() < 3 || b.size() < 3) {
        throw ContractViolation("wilcoxon_rank_sum: need at least 3 per sample");
    }
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    const std::size_t total = n + m;
    std::vector<double> pooled = a;
    pooled.insert(pooled.end(), b.begin(), b.end());
    const std::vector<double> ranks = midranks(pooled);

    double w = 0.0;
    for (std::size_t i = 0; i < n; ++i) w += ranks[i];
    const double expected = static_cast<double>(n) *
                            static_cast<double>(total + 1) / 2.0;
    const double observed_dev = std::abs(w - expected);

    if (total <= 12) {
        // Every n-subset of the pooled midranks is an equally likely rank
        // assignment under H0; count those at least as extreme.
        const unsigned full = 1u << total;
        long extreme = 0;
        long count = 0;
        for (unsigned mask = 0; mask < full; ++mask) {
            if (std::popcount(mask) != static_cast<int>(n)) continue;
            ++count;
            double ws = 0.0;
            for (std::size_t i = 0; i < total; ++i) {
                if (mask & (1u << i)) ws += ranks[i];
            }
            if (std::abs(ws - expected) >= observed_dev - 1e-12) ++extreme;
        }
        return static_cast<double>(extreme) / static_cast<double>(count);
    }

    // Normal approximation with tie correction.
    double tie_term = 0.0;
    {
        std::vector<double> sorted = pooled;
        std::sort(sorted.begin(), sorted.end());
        std::size_t i = 0;
        while (i < sorted.size()) {
            std::size_t j = i;
            while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
            double t = static_cast<double>(j - i + 1);
            tie_term += t * t * t - t;
            i = j + 1;
        }
    }
    const double nn = static_cast<double>(n);
    const double mm = static_cast<double>(m);
    const double tt = static_cast<double>(total);
    const double variance =
        nn * mm / 12.0 * ((tt + 1.0) - tie_term / (tt * (tt - 1.0)));
    if (variance <= 0.0) return 1.0; // all pooled values equal
    const double z = std::max(0.0, observed_dev - 0.5) / std::sqrt(variance);
    return std::min(1.0, std::erfc(z / std::numbers::sqrt2));
}

double mean(const std::vector<double>& v) {
    if (v.empty()) throw ContractViolation("mean: empty sample");
    return std::accumulate(v.begin(), v.end(), 0.0) /
           static_cast<double>(v.size());
}

double median(std::vector<double> v) {
    if (v.empty()) throw ContractViolation("median: empty sample");
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    if (v.size() % 2 == 1) return v[h];
    return 0.5 * (v[h - 1] + v[h]);
}

double sample_stddev(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double mu = mean(v);
    double ss = 0.0;
    for (double x : v) ss += (x - mu) * (x - mu);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

} // namespace momm
