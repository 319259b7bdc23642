#ifndef MOMM_CORE_HPP
#define MOMM_CORE_HPP

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace momm {

/// D real-valued decision variables. All objectives are minimized.
using DecisionVector = std::vector<double>;
using ObjectiveVector = std::vector<double>;

/// Thrown when a caller breaks a documented precondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Thrown for invalid run/experiment configurations.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Closed interval for one decision variable.
struct Interval {
    double low;
    double high;
};

using Bounds = std::vector<Interval>;

struct ProblemDescriptor {
    std::string name;
    int num_objectives = 0;        // M
    int num_variables = 0;         // D
    Bounds bounds;                 // size D
    int pareto_subset_count = 0;   // number of equivalent Pareto subsets
};

/// A decision vector together with its objective values. The objective
/// vector is computed exactly once, when the solution is created.
struct Solution {
    DecisionVector x;
    ObjectiveVector f;
};

/// Deterministic 64-bit random stream (xoshiro256++ seeded via splitmix64).
///
/// The generator is fixed so that a given seed yields the same draw
/// sequence on every platform; no OS entropy is ever consumed. Independent
/// substreams are obtained with derive(), which hashes a textual label
/// into a fresh seed. One stream is owned by exactly one run.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next_u64();

    /// Uniform double in [0, 1), 53 random bits.
    double next_double();

    /// Uniform double in [low, high).
    double uniform(double low, double high);

    /// Uniform index in [0, n). n must be positive.
    std::size_t next_index(std::size_t n);

    /// Independent substream for a named component ("init", "refset", ...).
    RandomStream derive(std::string_view label) const;

private:
    std::uint64_t seed_;
    std::array<std::uint64_t, 4> state_;
};

/// Pareto dominance under minimization: a dominates b iff a <= b in every
/// component and a < b in at least one. Equal vectors never dominate.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

/// Keeps exactly the solutions whose objective vector is dominated by no
/// other member. Objective-space duplicates are all retained: they may be
/// equivalent solutions with distinct decision vectors.
std::vector<Solution> nondominated_filter(const std::vector<Solution>& pop);

double euclidean_distance(std::span<const double> a, std::span<const double> b);

/// Squared L2 distance; cheaper building block for neighbor queries.
double squared_distance(std::span<const double> a, std::span<const double> b);

/// Projects every coordinate into its [low, high] interval.
DecisionVector clamp_to_bounds(DecisionVector x, const Bounds& bounds);

bool within_bounds(const DecisionVector& x, const Bounds& bounds);

} // namespace momm

#endif // MOMM_CORE_HPP
