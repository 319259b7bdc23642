#include <doctest.h>

#include <cmath>
#include <vector>

#include "momm/indicators.hpp"

using namespace momm;

namespace {

// Independent brute-force oracles, kept deliberately literal.
double oracle_igd_plus(const std::vector<ObjectiveVector>& archive,
                       const std::vector<ObjectiveVector>& reference) {
    double total = 0.0;
    for (const auto& p : reference) {
        double best = 1e300;
        for (const auto& a : archive) {
            double s = 0.0;
            for (std::size_t i = 0; i < p.size(); ++i) {
                double diff = std::max(a[i] - p[i], 0.0);
                s += diff * diff;
            }
            double d = std::sqrt(s);
            if (d < best) best = d;
        }
        total += best;
    }
    return total / static_cast<double>(reference.size());
}

double oracle_igdx(const std::vector<DecisionVector>& archive,
                   const std::vector<DecisionVector>& reference) {
    double total = 0.0;
    for (const auto& p : reference) {
        double best = 1e300;
        for (const auto& a : archive) {
            double s = 0.0;
            for (std::size_t i = 0; i < p.size(); ++i) {
                s += (a[i] - p[i]) * (a[i] - p[i]);
            }
            double d = std::sqrt(s);
            if (d < best) best = d;
        }
        total += best;
    }
    return total / static_cast<double>(reference.size());
}

} // namespace

TEST_CASE("igd_plus hand cases") {
    CHECK(igd_plus({{1, 1}}, {{0, 1}, {1, 0}}) == 1.0);
    // A dominating archive point contributes zero distance.
    CHECK(igd_plus({{-1, -1}}, {{0, 0}}) == 0.0);
    std::vector<ObjectiveVector> front = {{0, 1}, {0.5, 0.5}, {1, 0}};
    CHECK(igd_plus(front, front) == 0.0);
    CHECK_THROWS_AS(igd_plus({}, front), ContractViolation);
    CHECK_THROWS_AS(igd_plus(front, {}), ContractViolation);
}

TEST_CASE("igdx hand cases") {
    CHECK(igdx({{1, 0}}, {{0, 0}, {2, 0}}) == 1.0);
    std::vector<DecisionVector> set = {{0, 0}, {1, 1}};
    CHECK(igdx(set, set) == 0.0);
}

TEST_CASE("d_plus asymmetry versus plain distance") {
    // Archive point dominating the reference point: zero. Dominated by it:
    // full Euclidean distance.
    CHECK(igd_plus({{-3, -4}}, {{0, 0}}) == 0.0);
    CHECK(igd_plus({{3, 4}}, {{0, 0}}) == 5.0);
    // Mixed signs use only the worse components.
    CHECK(igd_plus({{3, -10}}, {{0, 0}}) == 3.0);
}

TEST_CASE("igd_plus and igdx match the brute-force oracle bitwise") {
    RandomStream rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 2 + static_cast<int>(rng.next_index(3));
        const int na = 1 + static_cast<int>(rng.next_index(50));
        const int np = 1 + static_cast<int>(rng.next_index(50));
        std::vector<ObjectiveVector> archive, reference;
        for (int i = 0; i < na; ++i) {
            ObjectiveVector v;
            for (int j = 0; j < m; ++j) v.push_back(rng.uniform(-5, 5));
            archive.push_back(std::move(v));
        }
        for (int i = 0; i < np; ++i) {
            ObjectiveVector v;
            for (int j = 0; j < m; ++j) v.push_back(rng.uniform(-5, 5));
            reference.push_back(std::move(v));
        }
        CHECK(igd_plus(archive, reference) == oracle_igd_plus(archive, reference));
        CHECK(igdx(archive, reference) == oracle_igdx(archive, reference));
    }
}

TEST_CASE("indicators never increase when the archive grows") {
    RandomStream rng(42);
    std::vector<ObjectiveVector> reference;
    for (int i = 0; i < 30; ++i) {
        reference.push_back({rng.uniform(0, 1), rng.uniform(0, 1)});
    }
    std::vector<ObjectiveVector> archive = {{rng.uniform(0, 1), rng.uniform(0, 1)}};
    double prev = igd_plus(archive, reference);
    for (int i = 0; i < 20; ++i) {
        archive.push_back({rng.uniform(0, 1), rng.uniform(0, 1)});
        double cur = igd_plus(archive, reference);
        CHECK(cur <= prev);
        prev = cur;
    }
}

TEST_CASE("hypervolume hand cases") {
    CHECK(hypervolume({{1, 2}, {2, 1}}, {3, 3}) == 3.0);
    CHECK(hypervolume({{3, 3}}, {3, 3}) == 0.0);
    CHECK(hypervolume({}, {3, 3}) == 0.0);
    // Dominated points contribute nothing.
    CHECK(hypervolume({{1, 2}, {2, 1}, {2.5, 2.5}}, {3, 3}) == 3.0);
    // Points beyond the reference point are clipped out.
    CHECK(hypervolume({{1, 2}, {5, 0}}, {3, 3}) == 2.0);
}

TEST_CASE("2-D hypervolume sweep agrees with Monte-Carlo sampling") {
    RandomStream rng(43);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<ObjectiveVector> archive;
        for (int i = 0; i < 20; ++i) {
            archive.push_back({rng.uniform(0, 2), rng.uniform(0, 2)});
        }
        ObjectiveVector ref = {2.0, 2.0};
        double exact = hypervolume(archive, ref);
        // Independent sampler: hit ratio inside [0,2]^2.
        const int samples = 400000;
        int hits = 0;
        for (int s = 0; s < samples; ++s) {
            double u = rng.uniform(0, 2), v = rng.uniform(0, 2);
            for (const auto& a : archive) {
                if (a[0] <= u && a[1] <= v) {
                    ++hits;
                    break;
                }
            }
        }
        double estimate = 4.0 * hits / samples;
        double p = exact / 4.0;
        double standard_error = 4.0 * std::sqrt(p * (1 - p) / samples);
        CHECK(std::abs(estimate - exact) <= 3.5 * standard_error + 1e-9);
    }
}

TEST_CASE("monte-carlo hypervolume for three objectives is deterministic and sane") {
    // Unit cube corner: the point (0,0,0) with ref (1,1,1) dominates the
    // whole box.
    double full = hypervolume({{0, 0, 0}}, {1, 1, 1});
    CHECK(full == doctest::Approx(1.0).epsilon(1e-6));
    double again = hypervolume({{0, 0, 0}}, {1, 1, 1});
    CHECK(full == again);
    // Half-box point.
    double half = hypervolume({{0.5, 0, 0}}, {1, 1, 1});
    CHECK(half == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("hv reference point rule") {
    std::vector<ObjectiveVector> front = {{0, 1}, {1, 0}, {0.5, 0.5}};
    auto ref = hv_reference_point(front);
    CHECK(ref == ObjectiveVector{1.1, 1.1});
}

TEST_CASE("score_archive bundles all three indicators") {
    std::vector<Solution> archive = {{{0.0, 0.0}, {0.0, 1.0}},
                                     {{1.0, 1.0}, {1.0, 0.0}}};
    ReferenceSet refset;
    refset.decision_points = {{0.0, 0.0}, {1.0, 1.0}};
    refset.objective_points = {{0.0, 1.0}, {1.0, 0.0}};
    auto report = score_archive(archive, refset);
    CHECK(report.archive_size == 2);
    CHECK(report.igd_plus == 0.0);
    CHECK(report.igdx == 0.0);
    // ref point (1.1, 1.1): two rectangles 1.1x0.1 and 0.1x1.1 overlapping
    // in 0.1x0.1.
    CHECK(report.hv == doctest::Approx(0.21).epsilon(1e-12));
}
