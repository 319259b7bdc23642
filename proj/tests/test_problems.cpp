#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <set>

#include "momm/problems.hpp"

using namespace momm;

TEST_CASE("sympart hand values and tile symmetry") {
    auto problem = make_sympart();
    CHECK(problem->descriptor().pareto_subset_count == 9);
    CHECK(problem->evaluate({0, 0}) == ObjectiveVector{4, 4});
    CHECK(problem->evaluate({2, 0}) == ObjectiveVector{16, 0});
    CHECK(problem->evaluate({-2, 0}) == ObjectiveVector{0, 16});
    // (14, 10) sits in the tile one step right and up from (0, 0).
    CHECK(problem->evaluate({14, 10}) == problem->evaluate({0, 0}));
    CHECK_THROWS_AS(problem->evaluate({101, 0}), std::domain_error);
}

TEST_CASE("sympart nine-fold translation symmetry") {
    auto problem = make_sympart();
    RandomStream rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        // In-tile point (center tile): x1 in (-7, 7), x2 in (-5, 5).
        double x1 = rng.uniform(-6.99, 6.99);
        double x2 = rng.uniform(-4.99, 4.99);
        auto base = problem->evaluate({x1, x2});
        for (int t1 = -1; t1 <= 1; ++t1) {
            for (int t2 = -1; t2 <= 1; ++t2) {
                auto shifted = problem->evaluate({x1 + 14.0 * t1, x2 + 10.0 * t2});
                CHECK(shifted[0] == doctest::Approx(base[0]).epsilon(1e-12));
                CHECK(shifted[1] == doctest::Approx(base[1]).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("ssuf1 hand values and branch equivalence") {
    auto problem = make_ssuf1();
    CHECK(problem->evaluate({2, 0}) == ObjectiveVector{0, 1});
    auto f = problem->evaluate({2.25, 1});
    CHECK(f[0] == 0.25);
    CHECK(f[1] == doctest::Approx(0.5).epsilon(1e-12));
    // Mirrored x1 with matching x2: equal objectives.
    RandomStream rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        double t = rng.next_double();
        double x2 = rng.uniform(-1, 1);
        auto a = problem->evaluate({2.0 - t, x2});
        auto b = problem->evaluate({2.0 + t, x2});
        // 2 - t and 2 + t round on different grids; the sine term amplifies
        // that last-ulp difference, so exact equality is unattainable.
        CHECK(a[0] == doctest::Approx(b[0]).epsilon(1e-12));
        CHECK(a[1] == doctest::Approx(b[1]).epsilon(1e-12));
    }
}

TEST_CASE("suf3 branch equivalence and reference-set consistency") {
    auto problem = make_suf3();
    RandomStream rng(23);
    // The two branch values of x2 for a fixed x1 evaluate identically.
    for (int trial = 0; trial < 200; ++trial) {
        double x1 = rng.next_double();
        double offset = 0.25 + 0.25 * std::sqrt(x1);
        auto lo = problem->evaluate({x1, 1.5 - offset});
        auto hi = problem->evaluate({x1, 1.5 + offset});
        CHECK(lo[0] == hi[0]);
        CHECK(lo[1] == doctest::Approx(hi[1]).epsilon(1e-12));
        CHECK(lo[1] == doctest::Approx(1.0 - std::sqrt(x1)).epsilon(1e-9));
    }
    // Interior points are dominated by the on-branch point at the same x1.
    for (int trial = 0; trial < 200; ++trial) {
        double x1 = rng.next_double();
        double x2 = rng.uniform(1.0, 2.0);
        double offset = 0.25 + 0.25 * std::sqrt(x1);
        auto f = problem->evaluate({x1, x2});
        auto front = problem->evaluate({x1, 1.5 + offset});
        if (std::abs(std::abs(x2 - 1.5) - offset) > 1e-9) {
            CHECK(dominates(front, f));
        }
    }
    // The whole reference set is mutually nondominated.
    RandomStream sampler(24);
    auto refset = problem->sample_reference_set(500, sampler);
    std::vector<Solution> as_solutions;
    for (std::size_t i = 0; i < refset.decision_points.size(); ++i) {
        as_solutions.push_back(
            {refset.decision_points[i], refset.objective_points[i]});
    }
    CHECK(nondominated_filter(as_solutions).size() == as_solutions.size());
}

TEST_CASE("multipolygon hand values") {
    auto p2 = make_multipolygon();
    auto f_center = p2->evaluate({0, 0});
    REQUIRE(f_center.size() == 6);
    for (double v : f_center) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

    // First vertex of the first polygon: distance zero on objective 1.
    const double pi = 3.14159265358979323846;
    DecisionVector v11 = {std::cos(2 * pi / 6), std::sin(2 * pi / 6)};
    CHECK(p2->evaluate(v11)[0] == doctest::Approx(0.0));

    auto p4 = make_multipolygon({.dimension = 4});
    auto f4 = p4->evaluate({0, 0, 0, 0});
    for (double v : f4) CHECK(v == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    CHECK_THROWS_AS(make_multipolygon({.dimension = 3}), ConfigError);
    CHECK(p4->descriptor().name == "polygon-d4");
}

TEST_CASE("multipolygon with coincident centers collapses subsets") {
    MultiPolygonParams params;
    params.centers = {{1.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}};
    auto problem = make_multipolygon(params);
    auto single = make_multipolygon({.centers = {{1.0, 1.0}}});
    RandomStream rng(25);
    for (int trial = 0; trial < 100; ++trial) {
        DecisionVector x = {rng.uniform(-3, 3), rng.uniform(-3, 3)};
        CHECK(problem->evaluate(x) == single->evaluate(x));
    }
}

TEST_CASE("sympart reference set: stratified line segments") {
    auto problem = make_sympart();
    RandomStream rng(26);
    auto refset = problem->sample_reference_set(9000, rng);
    REQUIRE(refset.decision_points.size() == 9000);
    std::vector<int> per_subset(9, 0);
    for (std::size_t i = 0; i < refset.decision_points.size(); ++i) {
        int label = refset.subset_labels[i];
        ++per_subset[static_cast<std::size_t>(label)];
        const auto& x = refset.decision_points[i];
        // Tile-local coordinates: p2 = 0 and |p1| <= a.
        double cx = (label % 3 - 1) * 14.0;
        double cy = (label / 3 - 1) * 10.0;
        CHECK(x[1] == cy);
        CHECK(std::abs(x[0] - cx) <= 2.0);
    }
    for (int c : per_subset) CHECK(c == 1000);
}

TEST_CASE("multipolygon reference set: uniform inside hexagons") {
    auto problem = make_multipolygon();
    RandomStream rng(27);
    auto refset = problem->sample_reference_set(10000, rng);
    REQUIRE(refset.decision_points.size() == 10000);
    const std::vector<std::pair<double, double>> centers = {
        {0, 0}, {0, 5}, {5, 0}, {5, 5}};
    std::vector<int> per_subset(4, 0);
    for (std::size_t i = 0; i < refset.decision_points.size(); ++i) {
        int label = refset.subset_labels[i];
        ++per_subset[static_cast<std::size_t>(label)];
        const auto& x = refset.decision_points[i];
        CHECK(inside_regular_polygon(x[0], x[1],
                                     centers[static_cast<std::size_t>(label)].first,
                                     centers[static_cast<std::size_t>(label)].second,
                                     1.0, 6, 1e-9));
    }
    for (int c : per_subset) CHECK(c == 2500);

    // Embedded sampling for D > 2 repeats the pair.
    auto p4 = make_multipolygon({.dimension = 4});
    RandomStream rng4(28);
    auto ref4 = p4->sample_reference_set(100, rng4);
    for (const auto& x : ref4.decision_points) {
        CHECK(x[0] == x[2]);
        CHECK(x[1] == x[3]);
    }
}

TEST_CASE("reference points are in bounds, Pareto optimal, and exact images") {
    for (const char* name : {"sympart", "ssuf1", "suf3", "polygon"}) {
        auto problem = make_problem(name);
        RandomStream rng(29);
        auto refset = problem->sample_reference_set(300, rng);
        std::vector<Solution> pop;
        for (std::size_t i = 0; i < refset.decision_points.size(); ++i) {
            CHECK(within_bounds(refset.decision_points[i],
                                problem->descriptor().bounds));
            auto f = problem->evaluate(refset.decision_points[i]);
            CHECK(f == refset.objective_points[i]);
            pop.push_back({refset.decision_points[i], f});
        }
        CHECK(nondominated_filter(pop).size() == pop.size());
    }
}

TEST_CASE("polygon interior points are not dominated by random samples") {
    auto problem = make_multipolygon();
    RandomStream rng(30);
    auto refset = problem->sample_reference_set(50, rng);
    for (int trial = 0; trial < 10000; ++trial) {
        DecisionVector x = {rng.uniform(-100, 100), rng.uniform(-100, 100)};
        auto f = problem->evaluate(x);
        for (const auto& ref_f : refset.objective_points) {
            CHECK_FALSE(dominates(f, ref_f));
        }
    }
}

TEST_CASE("equivalence witnesses per problem") {
    // Distinct decision vectors with identical objective vectors.
    struct Witness {
        const char* problem;
        DecisionVector x1, x2;
    };
    const Witness witnesses[] = {
        {"sympart", {0.5, 0.0}, {14.5, 10.0}},
        {"ssuf1", {1.75, 0.5}, {2.25, 0.5}},
        {"suf3", {0.25, 1.125}, {0.25, 1.875}},
        {"polygon", {0.25, 0.25}, {5.25, 5.25}},
    };
    for (const auto& w : witnesses) {
        auto problem = make_problem(w.problem);
        auto f1 = problem->evaluate(w.x1);
        auto f2 = problem->evaluate(w.x2);
        double gap = 0.0;
        for (std::size_t i = 0; i < f1.size(); ++i) {
            gap = std::max(gap, std::abs(f1[i] - f2[i]));
        }
        CHECK(gap <= 1e-9);
    }
}

TEST_CASE("reference set serialization round-trips exactly") {
    auto problem = make_suf3();
    RandomStream rng(31);
    auto refset = problem->sample_reference_set(137, rng);
    auto path = std::filesystem::temp_directory_path() / "momm_refset_test.txt";
    write_reference_set(path.string(), refset, problem->descriptor());
    auto loaded = read_reference_set(path.string());
    CHECK(loaded.problem_name == "suf3");
    CHECK(loaded.seed == refset.seed);
    REQUIRE(loaded.decision_points.size() == refset.decision_points.size());
    for (std::size_t i = 0; i < loaded.decision_points.size(); ++i) {
        CHECK(loaded.decision_points[i] == refset.decision_points[i]);
        CHECK(loaded.objective_points[i] == refset.objective_points[i]);
    }
    std::filesystem::remove(path);
}

TEST_CASE("problem factory") {
    CHECK(make_problem("sympart")->descriptor().name == "sympart");
    CHECK(make_problem("polygon", 8)->descriptor().num_variables == 8);
    CHECK(make_problem("polygon")->descriptor().num_variables == 2);
    CHECK_THROWS_AS(make_problem("nope"), ConfigError);
    CHECK_THROWS_AS(make_problem("suf3", 4), ConfigError);
}
