#ifndef MOMM_PROBLEMS_HPP
#define MOMM_PROBLEMS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "momm/core.hpp"

namespace momm {

/// Uniform sample of the full Pareto set together with its exact image.
/// subset_labels[i] names the equivalent Pareto subset decision_points[i]
/// was drawn from; labels live in memory only and are not serialized.
struct ReferenceSet {
    std::vector<DecisionVector> decision_points;
    std::vector<ObjectiveVector> objective_points;
    std::vector<int> subset_labels;
    std::string problem_name;
    std::uint64_t seed = 0;
};

/// A box-bounded minimization problem with a known Pareto-set description.
/// Evaluation is pure and thread-safe; reference sampling takes an explicit
/// stream owned by the caller.
class Problem {
public:
    virtual ~Problem() = default;

    const ProblemDescriptor& descriptor() const { return descriptor_; }

    /// Throws std::domain_error when x leaves the box.
    ObjectiveVector evaluate(const DecisionVector& x) const;

    /// Draws n points uniformly across all equivalent Pareto subsets
    /// (uniform by length for curve subsets, by area for region subsets),
    /// split proportionally to subset measure. objective_points is the
    /// exact image of decision_points.
    ReferenceSet sample_reference_set(int n, RandomStream& rng) const;

protected:
    explicit Problem(ProblemDescriptor d) : descriptor_(std::move(d)) {}

    virtual ObjectiveVector eval_unchecked(const DecisionVector& x) const = 0;

    /// Fills decision_points and subset_labels only; the base evaluates.
    virtual void sample_decision_points(int n, RandomStream& rng,
                                        ReferenceSet& out) const = 0;

    ProblemDescriptor descriptor_;
};

struct SymPartParams {
    double a = 2.0;  ///< half-length of each Pareto subset
    double b = 10.0; ///< vertical tile spacing
    double c = 10.0; ///< horizontal gap between subsets
};

struct MultiPolygonParams {
    std::vector<std::pair<double, double>> centers = {
        {0.0, 0.0}, {0.0, 5.0}, {5.0, 0.0}, {5.0, 5.0}};
    double radius = 1.0;
    int num_vertices = 6; ///< one objective per vertex
    int dimension = 2;    ///< decision dimension, even
};

/// 9 equivalent line-segment Pareto subsets on a 3x3 tile grid.
std::unique_ptr<Problem> make_sympart(const SymPartParams& params = {});

/// 2 equivalent sine-curve Pareto subsets mirrored around x1 = 2.
std::unique_ptr<Problem> make_ssuf1();

/// 2 equivalent curve subsets x2 = 1.5 +- (0.25 + 0.25 sqrt(x1)).
std::unique_ptr<Problem> make_suf3();

/// Distance-to-vertex objectives over four hexagons; Pareto set is the
/// union of the (embedded) filled hexagons.
std::unique_ptr<Problem> make_multipolygon(const MultiPolygonParams& params = {});

/// Factory by name: "sympart", "ssuf1", "suf3", "polygon". dimension is
/// honored for "polygon" only (0 means the problem default).
std::unique_ptr<Problem> make_problem(const std::string& name, int dimension = 0);

/// True when (px, py) lies inside or on the regular polygon with the given
/// center, circumradius, and vertex count (first vertex at angle 2*pi/n).
bool inside_regular_polygon(double px, double py, double cx, double cy,
                            double radius, int num_vertices, double tol = 1e-9);

/// Columnar text round-trip: header line with problem name, point count and
/// seed, then one point per line (decision coordinates, then objective
/// values) at 17 significant digits. Subset labels are dropped.
void write_reference_set(const std::string& path, const ReferenceSet& set,
                         const ProblemDescriptor& descriptor);
ReferenceSet read_reference_set(const std::string& path);

} // namespace momm

#endif // MOMM_PROBLEMS_HPP
