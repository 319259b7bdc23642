#include "momm/variation.hpp"

#include <algorithm>
#include <cmath>

namespace momm {

namespace {
constexpr double kSbxEps = 1e-14;
} // namespace

void VariationParams::validate() const {
    if (sbx_eta <= 0.0 || mut_eta <= 0.0) {
        throw ConfigError("variation: distribution indices must be positive");
    }
    if (sbx_prob < 0.0 || sbx_prob > 1.0) {
        throw ConfigError("variation: sbx_prob outside [0,1]");
    }
    if (mut_prob > 1.0) {
        throw ConfigError("variation: mut_prob above 1");
    }
}

double VariationParams::effective_mut_prob(std::size_t num_variables) const {
    if (mut_prob >= 0.0) return mut_prob;
    return 1.0 / static_cast<double>(num_variables);
}

DecisionVector sbx_crossover(const DecisionVector& x1, const DecisionVector& x2,
                             const VariationParams& params, const Bounds& bounds,
                             RandomStream& rng) {
    if (x1.size() != x2.size() || x1.size() != bounds.size()) {
        throw ContractViolation("sbx_crossover: dimension mismatch");
    }
    DecisionVector child = x1;
    if (rng.next_double() > params.sbx_prob) {
        return child;
    }
    for (std::size_t j = 0; j < x1.size(); ++j) {
        double y1 = std::min(x1[j], x2[j]);
        double y2 = std::max(x1[j], x2[j]);
        if (y2 - y1 < kSbxEps) continue;
        const double yl = bounds[j].low;
        const double yu = bounds[j].high;
        const double u = rng.next_double();
        const double exp_inv = 1.0 / (params.sbx_eta + 1.0);

        // Lower child: spread limited by the distance to the lower bound.
        double beta = 1.0 + 2.0 * (y1 - yl) / (y2 - y1);
        double alpha = 2.0 - std::pow(beta, -(params.sbx_eta + 1.0));
        double betaq;
        if (u <= 1.0 / alpha) {
            betaq = std::pow(u * alpha, exp_inv);
        } else {
            betaq = std::pow(1.0 / (2.0 - u * alpha), exp_inv);
        }
        double c1 = 0.5 * ((y1 + y2) - betaq * (y2 - y1));

        // Upper child, same draw u against the upper-bound-limited spread.
        beta = 1.0 + 2.0 * (yu - y2) / (y2 - y1);
        alpha = 2.0 - std::pow(beta, -(params.sbx_eta + 1.0));
        if (u <= 1.0 / alpha) {
            betaq = std::pow(u * alpha, exp_inv);
        } else {
            betaq = std::pow(1.0 / (2.0 - u * alpha), exp_inv);
        }
        double c2 = 0.5 * ((y1 + y2) + betaq * (y2 - y1));

        c1 = std::clamp(c1, yl, yu);
        c2 = std::clamp(c2, yl, yu);
        child[j] = (rng.next_double() <= 0.5) ? c1 : c2;
    }
    return child;
}

DecisionVector polynomial_mutation(DecisionVector x, const VariationParams& params,
                                   const Bounds& bounds, RandomStream& rng) {
    if (x.size() != bounds.size()) {
        throw ContractViolation("polynomial_mutation: dimension mismatch");
    }
    const double rate = params.effective_mut_prob(x.size());
    const double mut_pow = 1.0 / (params.mut_eta + 1.0);
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (rng.next_double() > rate) continue;
        const double yl = bounds[j].low;
        const double yu = bounds[j].high;
        if (yu - yl <= 0.0) continue;
        double y = x[j];
        const double delta1 = (y - yl) / (yu - yl);
        const double delta2 = (yu - y) / (yu - yl);
        const double rnd = rng.next_double();
        double deltaq;
        if (rnd <= 0.5) {
            const double xy = 1.0 - delta1;
            const double val =
                2.0 * rnd + (1.0 - 2.0 * rnd) * std::pow(xy, params.mut_eta + 1.0);
            deltaq = std::pow(val, mut_pow) - 1.0;
        } else {
            const double xy = 1.0 - delta2;
            const double val = 2.0 * (1.0 - rnd) +
                               2.0 * (rnd - 0.5) * std::pow(xy, params.mut_eta + 1.0);
            deltaq = 1.0 - std::pow(val, mut_pow);
        }
        y += deltaq * (yu - yl);
        x[j] = std::clamp(y, yl, yu);
    }
    return x;
}

} // namespace momm
