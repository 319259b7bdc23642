#include "momm/core.hpp"

#include <algorithm>
#include <cmath>

namespace momm {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) {
        word = splitmix64(sm);
    }
}

std::uint64_t RandomStream::next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RandomStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double low, double high) {
    return low + (high - low) * next_double();
}

std::size_t RandomStream::next_index(std::size_t n) {
    if (n == 0) {
        throw ContractViolation("next_index: n must be positive");
    }
    // Fixed-point multiply keeps the mapping platform-independent.
    using u128 = unsigned __int128;
    return static_cast<std::size_t>((static_cast<u128>(next_u64()) * n) >> 64);
}

RandomStream RandomStream::derive(std::string_view label) const {
    std::uint64_t mix = seed_ ^ fnv1a64(label);
    return RandomStream(splitmix64(mix));
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.size() != b.size()) {
        throw ContractViolation("dominates: objective vectors differ in length");
    }
    bool strictly_better_somewhere = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
        if (a[i] < b[i]) {
            strictly_better_somewhere = true;
        }
    }
    return strictly_better_somewhere;
}

std::vector<Solution> nondominated_filter(const std::vector<Solution>& pop) {
    std::vector<Solution> result;
    result.reserve(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i) {
        bool is_dominated = false;
        for (std::size_t j = 0; j < pop.size(); ++j) {
            if (j != i && dominates(pop[j].f, pop[i].f)) {
                is_dominated = true;
                break;
            }
        }
        if (!is_dominated) {
            result.push_back(pop[i]);
        }
    }
    return result;
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    return std::sqrt(squared_distance(a, b));
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw ContractViolation("distance: vectors differ in length");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

DecisionVector clamp_to_bounds(DecisionVector x, const Bounds& bounds) {
    if (x.size() != bounds.size()) {
        throw ContractViolation("clamp_to_bounds: dimension mismatch");
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = std::clamp(x[i], bounds[i].low, bounds[i].high);
    }
    return x;
}

bool within_bounds(const DecisionVector& x, const Bounds& bounds) {
    if (x.size() != bounds.size()) {
        return false;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < bounds[i].low || x[i] > bounds[i].high) {
            return false;
        }
    }
    return true;
}

} // namespace momm
