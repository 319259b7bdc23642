#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "momm/core.hpp"

using namespace momm;

TEST_CASE("dominance basics") {
    CHECK(dominates({1, 2}, {2, 2}));
    CHECK_FALSE(dominates({1, 2}, {1, 2}));
    CHECK_FALSE(dominates({1, 2}, {2, 1}));
    CHECK_FALSE(dominates({2, 1}, {1, 2}));
    CHECK(dominates({0, 0, 0}, {0, 0, 1}));
    CHECK_THROWS_AS(dominates({1, 2}, {1, 2, 3}), ContractViolation);
}

TEST_CASE("dominance is irreflexive and transitive on random vectors") {
    RandomStream rng(7);
    std::vector<ObjectiveVector> sample;
    for (int i = 0; i < 60; ++i) {
        sample.push_back({rng.uniform(0, 3), rng.uniform(0, 3), rng.uniform(0, 3)});
    }
    for (const auto& a : sample) CHECK_FALSE(dominates(a, a));
    for (const auto& a : sample) {
        for (const auto& b : sample) {
            for (const auto& c : sample) {
                if (dominates(a, b) && dominates(b, c)) {
                    CHECK(dominates(a, c));
                }
            }
        }
    }
}

TEST_CASE("nondominated filter hand cases") {
    std::vector<Solution> pop = {
        {{0}, {1, 2}}, {{1}, {2, 1}}, {{2}, {2, 2}}};
    auto kept = nondominated_filter(pop);
    REQUIRE(kept.size() == 2);
    CHECK(kept[0].f == ObjectiveVector{1, 2});
    CHECK(kept[1].f == ObjectiveVector{2, 1});

    // Equal objective vectors with distinct x are equivalent solutions and
    // both survive.
    std::vector<Solution> equiv = {{{0.0}, {1, 1}}, {{5.0}, {1, 1}}};
    CHECK(nondominated_filter(equiv).size() == 2);
}

TEST_CASE("nondominated filter equals pairwise oracle on random populations") {
    RandomStream rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Solution> pop;
        const int n = 1 + static_cast<int>(rng.next_index(200));
        for (int i = 0; i < n; ++i) {
            pop.push_back({{rng.next_double()},
                           {rng.uniform(0, 2), rng.uniform(0, 2)}});
        }
        std::vector<Solution> expected;
        for (const auto& s : pop) {
            bool dominated = false;
            for (const auto& t : pop) {
                if (dominates(t.f, s.f)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) expected.push_back(s);
        }
        auto got = nondominated_filter(pop);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].f == expected[i].f);
            CHECK(got[i].x == expected[i].x);
        }
    }
}

TEST_CASE("euclidean distance") {
    CHECK(euclidean_distance(std::vector<double>{0, 0},
                             std::vector<double>{3, 4}) == 5.0);
    CHECK(euclidean_distance(std::vector<double>{1, 2}, std::vector<double>{1, 2}) ==
          0.0);
    CHECK(euclidean_distance(std::vector<double>{0, 0, 0, 0},
                             std::vector<double>{1, 1, 1, 1}) == 2.0);
    CHECK_THROWS_AS(euclidean_distance(std::vector<double>{1},
                                       std::vector<double>{1, 2}),
                    ContractViolation);
}

TEST_CASE("euclidean distance triangle inequality on random triples") {
    RandomStream rng(13);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> a, b, c;
        for (int d = 0; d < 5; ++d) {
            a.push_back(rng.uniform(-10, 10));
            b.push_back(rng.uniform(-10, 10));
            c.push_back(rng.uniform(-10, 10));
        }
        double ab = euclidean_distance(a, b);
        double bc = euclidean_distance(b, c);
        double ac = euclidean_distance(a, c);
        CHECK(ac <= ab + bc + 1e-12 * (ab + bc));
    }
}

TEST_CASE("clamp to bounds") {
    Bounds box = {{-100, 100}, {1, 3}};
    CHECK(clamp_to_bounds({5, 2}, box) == DecisionVector{5, 2});
    CHECK(clamp_to_bounds({150, 2}, box) == DecisionVector{100, 2});
    CHECK(clamp_to_bounds({5, -3}, box) == DecisionVector{5, 1});
    CHECK(within_bounds({0, 2}, box));
    CHECK_FALSE(within_bounds({0, 0}, box));
}

TEST_CASE("random stream determinism over 10000 draws") {
    RandomStream a(123456789);
    RandomStream b(123456789);
    for (int i = 0; i < 10000; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
}

TEST_CASE("random stream basic distribution sanity") {
    RandomStream rng(99);
    double lo = 1.0, hi = 0.0, sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        double u = rng.next_double();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
        sum += u;
    }
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
    CHECK(lo < 0.01);
    CHECK(hi > 0.99);
}

TEST_CASE("derived substreams differ from the parent and are stable") {
    RandomStream parent(42);
    RandomStream d1 = parent.derive("init");
    RandomStream d2 = parent.derive("init");
    RandomStream d3 = parent.derive("refset");
    CHECK(d1.seed() == d2.seed());
    CHECK(d1.seed() != d3.seed());
    CHECK(d1.next_u64() == d2.next_u64());
    RandomStream fresh(42);
    CHECK(RandomStream(42).derive("init").next_u64() != fresh.next_u64());
}

TEST_CASE("next_index stays in range and covers") {
    RandomStream rng(5);
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 7000; ++i) ++hits[rng.next_index(7)];
    for (int h : hits) CHECK(h > 0);
    CHECK_THROWS_AS(rng.next_index(0), ContractViolation);
}
