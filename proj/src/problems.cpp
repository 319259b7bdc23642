#include "momm/problems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

namespace momm {

namespace {

constexpr double kPi = std::numbers::pi;

// Splits n across k subsets: n/k each, remainder to the first subsets.
std::vector<int> stratified_counts(int n, int k) {
    std::vector<int> counts(static_cast<std::size_t>(k), n / k);
    for (int i = 0; i < n % k; ++i) ++counts[static_cast<std::size_t>(i)];
    return counts;
}

// Cumulative chord-length table over a uniform parameter grid, for
// uniform-by-length sampling of a smooth planar curve.
class CurveTable {
public:
    CurveTable(double t_lo, double t_hi, int segments,
               const std::function<std::pair<double, double>(double)>& point)
        : t_lo_(t_lo), t_hi_(t_hi), point_(point) {
        cumulative_.resize(static_cast<std::size_t>(segments) + 1, 0.0);
        auto prev = point(t_lo);
        for (int s = 1; s <= segments; ++s) {
            double t = t_lo + (t_hi - t_lo) * s / segments;
            auto cur = point(t);
            double dx = cur.first - prev.first;
            double dy = cur.second - prev.second;
            cumulative_[static_cast<std::size_t>(s)] =
                cumulative_[static_cast<std::size_t>(s) - 1] +
                std::sqrt(dx * dx + dy * dy);
            prev = cur;
        }
    }

    double total_length() const { return cumulative_.back(); }

    // Point at arc length s from the curve start, linear within a segment.
    std::pair<double, double> at_length(double s) const {
        auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), s);
        std::size_t hi = std::min(
            static_cast<std::size_t>(
                std::max<std::ptrdiff_t>(1, it - cumulative_.begin())),
            cumulative_.size() - 1);
        double seg_lo = cumulative_[hi - 1];
        double seg_hi = cumulative_[hi];
        double frac = seg_hi > seg_lo ? (s - seg_lo) / (seg_hi - seg_lo) : 0.0;
        double grid = static_cast<double>(hi - 1) + frac;
        double t = t_lo_ + (t_hi_ - t_lo_) * grid /
                               static_cast<double>(cumulative_.size() - 1);
        return point_(t);
    }

private:
    double t_lo_, t_hi_;
    std::function<std::pair<double, double>(double)> point_;
    std::vector<double> cumulative_;
};

constexpr int kCurveSegments = 16384;

// ---------------------------------------------------------------------------

class SymPartProblem final : public Problem {
public:
    explicit SymPartProblem(const SymPartParams& p)
        : Problem({"sympart", 2, 2, Bounds{{-100.0, 100.0}, {-100.0, 100.0}}, 9}),
          p_(p) {
        if (p_.a <= 0.0 || p_.b <= 0.0 || p_.c <= 0.0) {
            throw ConfigError("sympart: parameters must be positive");
        }
    }

protected:
    ObjectiveVector eval_unchecked(const DecisionVector& x) const override {
        const double pitch = p_.c + 2.0 * p_.a;
        double t1 = std::clamp(std::round(x[0] / pitch), -1.0, 1.0);
        double t2 = std::clamp(std::round(x[1] / p_.b), -1.0, 1.0);
        double p1 = x[0] - t1 * pitch;
        double p2 = x[1] - t2 * p_.b;
        return {(p1 + p_.a) * (p1 + p_.a) + p2 * p2,
                (p1 - p_.a) * (p1 - p_.a) + p2 * p2};
    }

    void sample_decision_points(int n, RandomStream& rng,
                                ReferenceSet& out) const override {
        // Nine equal-length segments, one per tile: p2 = 0, p1 in [-a, a].
        const double pitch = p_.c + 2.0 * p_.a;
        auto counts = stratified_counts(n, 9);
        for (int k = 0; k < 9; ++k) {
            double cx = (k % 3 - 1) * pitch;
            double cy = (k / 3 - 1) * p_.b;
            for (int i = 0; i < counts[static_cast<std::size_t>(k)]; ++i) {
                out.decision_points.push_back({cx + rng.uniform(-p_.a, p_.a), cy});
                out.subset_labels.push_back(k);
            }
        }
    }

private:
    SymPartParams p_;
};

// ---------------------------------------------------------------------------

class Ssuf1Problem final : public Problem {
public:
    Ssuf1Problem()
        : Problem({"ssuf1", 2, 2, Bounds{{1.0, 3.0}, {-1.0, 1.0}}, 2}) {}

protected:
    ObjectiveVector eval_unchecked(const DecisionVector& x) const override {
        double f1 = std::abs(x[0] - 2.0);
        double s = x[1] - std::sin(6.0 * kPi * f1 + kPi);
        return {f1, 1.0 - std::sqrt(f1) + 2.0 * s * s};
    }

    void sample_decision_points(int n, RandomStream& rng,
                                ReferenceSet& out) const override {
        // Branch sign picks x1 = 2 - t or x1 = 2 + t, t = f1 in [0, 1];
        // both branches trace x2 = sin(6 pi t + pi) and have equal length.
        auto counts = stratified_counts(n, 2);
        for (int branch = 0; branch < 2; ++branch) {
            double sign = branch == 0 ? -1.0 : 1.0;
            CurveTable table(0.0, 1.0, kCurveSegments, [sign](double t) {
                return std::pair{2.0 + sign * t, std::sin(6.0 * kPi * t + kPi)};
            });
            for (int i = 0; i < counts[static_cast<std::size_t>(branch)]; ++i) {
                auto [x1, x2] =
                    table.at_length(rng.next_double() * table.total_length());
                out.decision_points.push_back({x1, std::clamp(x2, -1.0, 1.0)});
                out.subset_labels.push_back(branch);
            }
        }
    }
};

// ---------------------------------------------------------------------------

class Suf3Problem final : public Problem {
public:
    Suf3Problem()
        : Problem({"suf3", 2, 2, Bounds{{0.0, 1.0}, {1.0, 2.0}}, 2}) {}

    static double branch_offset(double x1) {
        return 0.25 + 0.25 * std::sqrt(x1);
    }

private:
    static constexpr double kLowerValleySlope = 5.0;

protected:
    // Both valley floors sit exactly on the branch curves, so the two
    // Pareto subsets stay objective-equivalent; the lower valley is much
    // steeper, which makes the lower branch harder to hold on to.
    ObjectiveVector eval_unchecked(const DecisionVector& x) const override {
        double off = branch_offset(x[0]);
        double dl = kLowerValleySlope * (x[1] - (1.5 - off));
        double dh = x[1] - (1.5 + off);
        double s = std::min(dl * dl, dh * dh);
        return {x[0], 1.0 - std::sqrt(x[0]) + 2.0 * s};
    }

    void sample_decision_points(int n, RandomStream& rng,
                                ReferenceSet& out) const override {
        // Parameterized by r = sqrt(x1) so the tangent stays finite at
        // x1 = 0; the two branches mirror around x2 = 1.5 (equal length).
        auto counts = stratified_counts(n, 2);
        for (int branch = 0; branch < 2; ++branch) {
            double sign = branch == 0 ? -1.0 : 1.0;
            CurveTable table(0.0, 1.0, kCurveSegments, [sign](double r) {
                return std::pair{r * r, 1.5 + sign * (0.25 + 0.25 * r)};
            });
            for (int i = 0; i < counts[static_cast<std::size_t>(branch)]; ++i) {
                auto [x1, x2] =
                    table.at_length(rng.next_double() * table.total_length());
                out.decision_points.push_back(
                    {std::clamp(x1, 0.0, 1.0), std::clamp(x2, 1.0, 2.0)});
                out.subset_labels.push_back(branch);
            }
        }
    }
};

// ---------------------------------------------------------------------------

class MultiPolygonProblem final : public Problem {
public:
    explicit MultiPolygonProblem(const MultiPolygonParams& p)
        : Problem(describe(p)), p_(p) {
        for (int k = 0; k < static_cast<int>(p_.centers.size()); ++k) {
            for (int i = 0; i < p_.num_vertices; ++i) {
                double angle = 2.0 * kPi * (i + 1) / p_.num_vertices;
                vertices_.push_back(
                    embed(p_.centers[static_cast<std::size_t>(k)].first +
                              p_.radius * std::cos(angle),
                          p_.centers[static_cast<std::size_t>(k)].second +
                              p_.radius * std::sin(angle)));
            }
        }
    }

protected:
    ObjectiveVector eval_unchecked(const DecisionVector& x) const override {
        const int num_polygons = static_cast<int>(p_.centers.size());
        ObjectiveVector f(static_cast<std::size_t>(p_.num_vertices));
        for (int i = 0; i < p_.num_vertices; ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (int k = 0; k < num_polygons; ++k) {
                best = std::min(
                    best, squared_distance(
                              x, vertices_[static_cast<std::size_t>(
                                     k * p_.num_vertices + i)]));
            }
            f[static_cast<std::size_t>(i)] = std::sqrt(best);
        }
        return f;
    }

    void sample_decision_points(int n, RandomStream& rng,
                                ReferenceSet& out) const override {
        // Uniform by area inside each polygon: pick one of the congruent
        // center-fan triangles, then a uniform point inside it.
        const int num_polygons = static_cast<int>(p_.centers.size());
        auto counts = stratified_counts(n, num_polygons);
        for (int k = 0; k < num_polygons; ++k) {
            auto [cx, cy] = p_.centers[static_cast<std::size_t>(k)];
            for (int i = 0; i < counts[static_cast<std::size_t>(k)]; ++i) {
                auto tri = static_cast<int>(
                    rng.next_index(static_cast<std::size_t>(p_.num_vertices)));
                double a1 = 2.0 * kPi * (tri + 1) / p_.num_vertices;
                double a2 = 2.0 * kPi * (tri + 2) / p_.num_vertices;
                double r1 = std::sqrt(rng.next_double());
                double r2 = rng.next_double();
                // P = (1-r1) C + r1 (1-r2) V1 + r1 r2 V2, uniform in the
                // triangle (C, V1, V2).
                double px = (1.0 - r1) * cx +
                            r1 * (1.0 - r2) * (cx + p_.radius * std::cos(a1)) +
                            r1 * r2 * (cx + p_.radius * std::cos(a2));
                double py = (1.0 - r1) * cy +
                            r1 * (1.0 - r2) * (cy + p_.radius * std::sin(a1)) +
                            r1 * r2 * (cy + p_.radius * std::sin(a2));
                out.decision_points.push_back(embed(px, py));
                out.subset_labels.push_back(k);
            }
        }
    }

private:
    static ProblemDescriptor describe(const MultiPolygonParams& p) {
        if (p.dimension < 2 || p.dimension % 2 != 0) {
            throw ConfigError("polygon: decision dimension must be even and >= 2");
        }
        if (p.centers.empty() || p.radius <= 0.0 || p.num_vertices < 3) {
            throw ConfigError("polygon: bad geometry parameters");
        }
        return {"polygon-d" + std::to_string(p.dimension), p.num_vertices,
                p.dimension,
                Bounds(static_cast<std::size_t>(p.dimension), {-100.0, 100.0}),
                static_cast<int>(p.centers.size())};
    }

    // (u, v) repeated across consecutive coordinate pairs.
    DecisionVector embed(double u, double v) const {
        DecisionVector x(static_cast<std::size_t>(p_.dimension));
        for (std::size_t j = 0; j < x.size(); j += 2) {
            x[j] = u;
            x[j + 1] = v;
        }
        return x;
    }

    MultiPolygonParams p_;
    std::vector<DecisionVector> vertices_; // [polygon * num_vertices + vertex]
};

} // namespace

// ---------------------------------------------------------------------------

ObjectiveVector Problem::evaluate(const DecisionVector& x) const {
    if (static_cast<int>(x.size()) != descriptor_.num_variables) {
        throw ContractViolation(descriptor_.name + ": wrong decision dimension");
    }
    if (!within_bounds(x, descriptor_.bounds)) {
        throw std::domain_error(descriptor_.name + ": point outside box bounds");
    }
    return eval_unchecked(x);
}

ReferenceSet Problem::sample_reference_set(int n, RandomStream& rng) const {
    if (n < 1) throw ContractViolation("sample_reference_set: n must be positive");
    ReferenceSet set;
    set.problem_name = descriptor_.name;
    set.seed = rng.seed();
    set.decision_points.reserve(static_cast<std::size_t>(n));
    set.subset_labels.reserve(static_cast<std::size_t>(n));
    sample_decision_points(n, rng, set);
    set.objective_points.reserve(set.decision_points.size());
    for (const auto& x : set.decision_points) {
        set.objective_points.push_back(evaluate(x));
    }
    return set;
}

std::unique_ptr<Problem> make_sympart(const SymPartParams& params) {
    return std::make_unique<SymPartProblem>(params);
}

std::unique_ptr<Problem> make_ssuf1() { return std::make_unique<Ssuf1Problem>(); }

std::unique_ptr<Problem> make_suf3() { return std::make_unique<Suf3Problem>(); }

std::unique_ptr<Problem> make_multipolygon(const MultiPolygonParams& params) {
    return std::make_unique<MultiPolygonProblem>(params);
}

std::unique_ptr<Problem> make_problem(const std::string& name, int dimension) {
    if (name == "polygon") {
        MultiPolygonParams p;
        if (dimension > 0) p.dimension = dimension;
        return make_multipolygon(p);
    }
    if (dimension > 0) {
        throw ConfigError(name + ": dimension is fixed for this problem");
    }
    if (name == "sympart") return make_sympart();
    if (name == "ssuf1") return make_ssuf1();
    if (name == "suf3") return make_suf3();
    throw ConfigError("unknown problem: " + name);
}

bool inside_regular_polygon(double px, double py, double cx, double cy,
                            double radius, int num_vertices, double tol) {
    // Vertices in counterclockwise order; inside iff never to the right of
    // any directed edge.
    for (int i = 0; i < num_vertices; ++i) {
        double a1 = 2.0 * kPi * (i + 1) / num_vertices;
        double a2 = 2.0 * kPi * (i + 2) / num_vertices;
        double x1 = cx + radius * std::cos(a1), y1 = cy + radius * std::sin(a1);
        double x2 = cx + radius * std::cos(a2), y2 = cy + radius * std::sin(a2);
        double cross = (x2 - x1) * (py - y1) - (y2 - y1) * (px - x1);
        if (cross < -tol) return false;
    }
    return true;
}

void write_reference_set(const std::string& path, const ReferenceSet& set,
                         const ProblemDescriptor& descriptor) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write reference set: " + path);
    out << "# problem=" << set.problem_name
        << " n=" << set.decision_points.size() << " seed=" << set.seed
        << " d=" << descriptor.num_variables << " m=" << descriptor.num_objectives
        << "\n";
    char buf[32];
    for (std::size_t i = 0; i < set.decision_points.size(); ++i) {
        bool first = true;
        auto emit = [&](double v) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            if (!first) out << ' ';
            out << buf;
            first = false;
        };
        for (double v : set.decision_points[i]) emit(v);
        for (double v : set.objective_points[i]) emit(v);
        out << "\n";
    }
    if (!out) throw ConfigError("write failed: " + path);
}

ReferenceSet read_reference_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read reference set: " + path);
    std::string header;
    std::getline(in, header);
    ReferenceSet set;
    std::size_t n = 0;
    int d = 0, m = 0;
    {
        std::istringstream hs(header);
        std::string token;
        while (hs >> token) {
            auto eq = token.find('=');
            if (eq == std::string::npos) continue;
            std::string key = token.substr(0, eq);
            std::string value = token.substr(eq + 1);
            if (key == "problem") set.problem_name = value;
            else if (key == "n") n = std::stoull(value);
            else if (key == "seed") set.seed = std::stoull(value);
            else if (key == "d") d = std::stoi(value);
            else if (key == "m") m = std::stoi(value);
        }
    }
    if (n == 0 || d <= 0 || m <= 0) {
        throw ConfigError("malformed reference set header: " + path);
    }
    set.decision_points.reserve(n);
    set.objective_points.reserve(n);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        DecisionVector x(static_cast<std::size_t>(d));
        ObjectiveVector f(static_cast<std::size_t>(m));
        for (double& v : x) ls >> v;
        for (double& v : f) ls >> v;
        if (!ls) throw ConfigError("malformed reference set row: " + path);
        set.decision_points.push_back(std::move(x));
        set.objective_points.push_back(std::move(f));
    }
    if (set.decision_points.size() != n) {
        throw ConfigError("reference set truncated: " + path);
    }
    return set;
}

} // namespace momm
