#include "momm/scalarize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

namespace momm {

namespace {

// C(n, k) without overflow for the sizes seen here (lambda <= a few
// thousand). Saturates instead of wrapping.
std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // r fits: values stay far below 2^64 for H, M in practical range.
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        if (r > (std::uint64_t{1} << 62)) return std::uint64_t{1} << 62;
    }
    return r;
}

// All compositions of H into M nonnegative parts, first coordinate
// descending, each mapped to a weight vector part/H. Recursion depth is
// num_objectives, which is tiny.
void lattice_weights(int num_objectives, int h,
                     std::vector<WeightVector>& out) {
    std::vector<int> acc(static_cast<std::size_t>(num_objectives), 0);
    auto rec = [&](auto&& self, int index, int remaining) -> void {
        if (index == num_objectives - 1) {
            acc[static_cast<std::size_t>(index)] = remaining;
            WeightVector w(static_cast<std::size_t>(num_objectives));
            for (int j = 0; j < num_objectives; ++j) {
                w[static_cast<std::size_t>(j)] =
                    static_cast<double>(acc[static_cast<std::size_t>(j)]) /
                    static_cast<double>(h);
            }
            out.push_back(std::move(w));
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            acc[static_cast<std::size_t>(index)] = v;
            self(self, index + 1, remaining - v);
        }
    };
    rec(rec, 0, h);
}

bool nearly_equal_weights(const WeightVector& a, const WeightVector& b) {
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (std::abs(a[j] - b[j]) > 1e-12) return false;
    }
    return true;
}

} // namespace

std::vector<WeightVector> generate_weights(int num_objectives, int lambda) {
    if (num_objectives < 2) {
        throw ContractViolation("generate_weights: need at least 2 objectives");
    }
    if (lambda < 1) {
        throw ContractViolation("generate_weights: lambda must be positive");
    }
    const auto m = static_cast<std::size_t>(num_objectives);
    if (lambda == 1) {
        return {WeightVector(m, 1.0 / static_cast<double>(num_objectives))};
    }
    std::vector<WeightVector> weights;
    weights.reserve(static_cast<std::size_t>(lambda));
    if (num_objectives == 2) {
        for (int i = 0; i < lambda; ++i) {
            double a = static_cast<double>(i) / static_cast<double>(lambda - 1);
            weights.push_back({1.0 - a, a});
        }
        return weights;
    }
    // Largest full lattice that fits.
    int h = 1;
    while (binomial(h + 1 + num_objectives - 1, num_objectives - 1) <=
           static_cast<std::uint64_t>(lambda)) {
        ++h;
    }
    if (binomial(h + num_objectives - 1, num_objectives - 1) >
        static_cast<std::uint64_t>(lambda)) {
        // Even H=1 does not fit (lambda < M); degenerate but legal. Fill
        // everything from the random stream below.
        h = 0;
    }
    if (h > 0) {
        lattice_weights(num_objectives, h, weights);
    }
    // Top up with uniform simplex points from a stream keyed only by
    // (M, lambda) so the result is reproducible across processes.
    RandomStream stream(0x9E3779B97F4A7C15ULL ^
                        (static_cast<std::uint64_t>(num_objectives) << 32) ^
                        static_cast<std::uint64_t>(lambda));
    while (static_cast<int>(weights.size()) < lambda) {
        WeightVector w(m);
        double total = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            // Exponential draws normalized give a uniform simplex point.
            double u = stream.next_double();
            while (u <= 0.0) u = stream.next_double();
            w[j] = -std::log(u);
            total += w[j];
        }
        for (double& v : w) v /= total;
        bool duplicate = false;
        for (const auto& existing : weights) {
            if (nearly_equal_weights(existing, w)) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) weights.push_back(std::move(w));
    }
    return weights;
}

double tchebycheff(const WeightVector& w, const ObjectiveVector& f,
                   const IdealPoint& z) {
    if (w.size() != f.size() || f.size() != z.size()) {
        throw ContractViolation("tchebycheff: dimension mismatch");
    }
    double g = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        double wi = std::max(w[i], 1e-6);
        g = std::max(g, wi * std::abs(f[i] - z[i]));
    }
    return g;
}

double pbi(const WeightVector& w, const ObjectiveVector& f,
           const IdealPoint& z, double theta) {
    if (w.size() != f.size() || f.size() != z.size()) {
        throw ContractViolation("pbi: dimension mismatch");
    }
    double norm = 0.0;
    for (double wi : w) norm += wi * wi;
    norm = std::sqrt(norm);
    if (norm <= 0.0) {
        throw ContractViolation("pbi: zero weight vector");
    }
    double d1 = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        d1 += (f[i] - z[i]) * (w[i] / norm);
    }
    d1 = std::abs(d1);
    double d2sq = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        double r = (f[i] - z[i]) - d1 * (w[i] / norm);
        d2sq += r * r;
    }
    return d1 + theta * std::sqrt(d2sq);
}

double scalarize(Scalarizer s, const WeightVector& w, const ObjectiveVector& f,
                 const IdealPoint& z, double theta) {
    switch (s) {
        case Scalarizer::kTchebycheff:
            return tchebycheff(w, f, z);
        case Scalarizer::kPbi:
            return pbi(w, f, z, theta);
    }
    throw ContractViolation("scalarize: unknown scalarizer");
}

IdealPoint update_ideal(IdealPoint z, const ObjectiveVector& f) {
    if (z.size() != f.size()) {
        throw ContractViolation("update_ideal: dimension mismatch");
    }
    for (std::size_t i = 0; i < z.size(); ++i) {
        z[i] = std::min(z[i], f[i]);
    }
    return z;
}

std::vector<int> neighbor_indices(const std::vector<WeightVector>& weights,
                                  int i, int neighborhood_size) {
    const int n = static_cast<int>(weights.size());
    if (i < 0 || i >= n) {
        throw ContractViolation("neighbor_indices: index out of range");
    }
    if (neighborhood_size < 0 || neighborhood_size > n - 1) {
        throw ContractViolation("neighbor_indices: bad neighborhood size");
    }
    std::vector<std::pair<double, int>> order;
    order.reserve(static_cast<std::size_t>(n - 1));
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        order.emplace_back(
            squared_distance(weights[static_cast<std::size_t>(i)],
                             weights[static_cast<std::size_t>(j)]),
            j);
    }
    std::sort(order.begin(), order.end());
    std::vector<int> result;
    result.reserve(static_cast<std::size_t>(neighborhood_size));
    for (int k = 0; k < neighborhood_size; ++k) {
        result.push_back(order[static_cast<std::size_t>(k)].second);
    }
    return result;
}

std::vector<std::vector<int>> all_neighbor_indices(
    const std::vector<WeightVector>& weights, int neighborhood_size) {
    std::vector<std::vector<int>> result;
    result.reserve(weights.size());
    for (int i = 0; i < static_cast<int>(weights.size()); ++i) {
        result.push_back(neighbor_indices(weights, i, neighborhood_size));
    }
    return result;
}

} // namespace momm
