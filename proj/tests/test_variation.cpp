#include <doctest.h>

#include <cmath>

#include "momm/variation.hpp"

using namespace momm;

namespace {
const Bounds kUnitBox = {{0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}};
}

TEST_CASE("identical parents produce an identical child without mutation") {
    RandomStream rng(1);
    VariationParams params;
    params.mut_prob = 0.0;
    DecisionVector x = {0.2, 0.6, 0.9};
    for (int i = 0; i < 50; ++i) {
        auto child = sbx_crossover(x, x, params, kUnitBox, rng);
        child = polynomial_mutation(std::move(child), params, kUnitBox, rng);
        CHECK(child == x);
    }
}

TEST_CASE("zero-probability operators are the identity on the first parent") {
    RandomStream rng(2);
    VariationParams params;
    params.sbx_prob = 0.0;
    params.mut_prob = 0.0;
    DecisionVector x1 = {0.1, 0.5, 0.8};
    DecisionVector x2 = {0.9, 0.2, 0.3};
    for (int i = 0; i < 50; ++i) {
        auto child = sbx_crossover(x1, x2, params, kUnitBox, rng);
        child = polynomial_mutation(std::move(child), params, kUnitBox, rng);
        CHECK(child == x1);
    }
}

TEST_CASE("children stay inside the box") {
    RandomStream rng(3);
    VariationParams params;
    Bounds box = {{-1.0, 2.0}, {5.0, 5.5}};
    for (int i = 0; i < 10000; ++i) {
        DecisionVector x1 = {rng.uniform(-1, 2), rng.uniform(5, 5.5)};
        DecisionVector x2 = {rng.uniform(-1, 2), rng.uniform(5, 5.5)};
        auto child = sbx_crossover(x1, x2, params, box, rng);
        child = polynomial_mutation(std::move(child), params, box, rng);
        CHECK(within_bounds(child, box));
    }
}

TEST_CASE("crossover is mean-preserving around the parent midpoint") {
    // Both SBX children are symmetric around (x1+x2)/2; with the per-variable
    // coin flip the expected child coordinate is the midpoint. Interior
    // parents keep bound clamping out of play.
    RandomStream rng(4);
    VariationParams params;
    params.mut_prob = 0.0;
    const DecisionVector x1 = {0.45, 0.45, 0.45};
    const DecisionVector x2 = {0.55, 0.55, 0.55};
    const int trials = 100000;
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < trials; ++i) {
        auto child = sbx_crossover(x1, x2, params, kUnitBox, rng);
        sum += child[0];
        sum_sq += child[0] * child[0];
    }
    double mean = sum / trials;
    double var = sum_sq / trials - mean * mean;
    double standard_error = std::sqrt(var / trials);
    CHECK(std::abs(mean - 0.5) <= 3.0 * standard_error);
}

TEST_CASE("mutation rate defaults to one over dimension") {
    VariationParams params;
    CHECK(params.effective_mut_prob(4) == 0.25);
    CHECK(params.effective_mut_prob(10) == 0.1);
    params.mut_prob = 0.5;
    CHECK(params.effective_mut_prob(10) == 0.5);
}

TEST_CASE("parameter validation") {
    VariationParams params;
    CHECK_NOTHROW(params.validate());
    params.sbx_eta = 0.0;
    CHECK_THROWS_AS(params.validate(), ConfigError);
    params = {};
    params.mut_prob = 1.5;
    CHECK_THROWS_AS(params.validate(), ConfigError);
    params = {};
    params.sbx_prob = -0.1;
    CHECK_THROWS_AS(params.validate(), ConfigError);
}

TEST_CASE("mutation perturbs at the expected rate") {
    RandomStream rng(6);
    VariationParams params; // mut_prob = 1/3 on a 3-dim vector
    const DecisionVector x = {0.5, 0.5, 0.5};
    int changed = 0;
    const int trials = 30000;
    for (int i = 0; i < trials; ++i) {
        auto y = polynomial_mutation(x, params, kUnitBox, rng);
        for (int d = 0; d < 3; ++d) {
            if (y[static_cast<std::size_t>(d)] != 0.5) ++changed;
        }
    }
    // 3 coordinates * 1/3 rate = 1 expected change per trial.
    CHECK(changed == doctest::Approx(trials).epsilon(0.05));
}
