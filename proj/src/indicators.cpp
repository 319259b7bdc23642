#include "momm/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace momm {

namespace {

double d_plus_squared(const ObjectiveVector& p, const ObjectiveVector& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        double diff = a[i] - p[i];
        if (diff > 0.0) s += diff * diff;
    }
    return s;
}

constexpr std::uint64_t kHvSamplingSeed = 0x48564d43u; // fixed across runs
constexpr int kHvSamples = 1000000;

} // namespace

double igd_plus(const std::vector<ObjectiveVector>& archive,
                const std::vector<ObjectiveVector>& reference_front) {
    if (archive.empty() || reference_front.empty()) {
        throw ContractViolation("igd_plus: empty input set");
    }
    double total = 0.0;
    for (const auto& p : reference_front) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& a : archive) {
            best = std::min(best, d_plus_squared(p, a));
        }
        total += std::sqrt(best);
    }
    return total / static_cast<double>(reference_front.size());
}

double igdx(const std::vector<DecisionVector>& archive,
            const std::vector<DecisionVector>& reference_set) {
    if (archive.empty() || reference_set.empty()) {
        throw ContractViolation("igdx: empty input set");
    }
    double total = 0.0;
    for (const auto& s : reference_set) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& a : archive) {
            best = std::min(best, squared_distance(s, a));
        }
        total += std::sqrt(best);
    }
    return total / static_cast<double>(reference_set.size());
}

double hypervolume(const std::vector<ObjectiveVector>& archive,
                   const ObjectiveVector& ref) {
    // Only points strictly inside the ref-bounded orthant contribute.
    std::vector<ObjectiveVector> pts;
    for (const auto& a : archive) {
        bool inside = a.size() == ref.size();
        for (std::size_t i = 0; inside && i < ref.size(); ++i) {
            if (a[i] >= ref[i]) inside = false;
        }
        if (inside) pts.push_back(a);
    }
    if (pts.empty()) return 0.0;

    if (ref.size() == 2) {
        // Sweep by f1 ascending; each point adds a rectangle capped above
        // by the best f2 seen so far.
        std::sort(pts.begin(), pts.end());
        double volume = 0.0;
        double prev_f2 = ref[1];
        for (const auto& a : pts) {
            if (a[1] < prev_f2) {
                volume += (ref[0] - a[0]) * (prev_f2 - a[1]);
                prev_f2 = a[1];
            }
        }
        return volume;
    }

    // Monte-Carlo inside the box [low, ref], low = componentwise min of the
    // contributing points. Fixed seed keeps scoring deterministic.
    ObjectiveVector low = pts.front();
    for (const auto& a : pts) {
        for (std::size_t i = 0; i < low.size(); ++i) low[i] = std::min(low[i], a[i]);
    }
    double box = 1.0;
    for (std::size_t i = 0; i < ref.size(); ++i) box *= ref[i] - low[i];
    if (box <= 0.0) return 0.0;
    RandomStream rng(kHvSamplingSeed);
    ObjectiveVector sample(ref.size());
    long hits = 0;
    for (int s = 0; s < kHvSamples; ++s) {
        for (std::size_t i = 0; i < ref.size(); ++i) {
            sample[i] = rng.uniform(low[i], ref[i]);
        }
        for (const auto& a : pts) {
            bool dominated = true;
            for (std::size_t i = 0; dominated && i < ref.size(); ++i) {
                if (a[i] > sample[i]) dominated = false;
            }
            if (dominated) {
                ++hits;
                break;
            }
        }
    }
    return box * static_cast<double>(hits) / static_cast<double>(kHvSamples);
}

ObjectiveVector hv_reference_point(
    const std::vector<ObjectiveVector>& reference_front) {
    if (reference_front.empty()) {
        throw ContractViolation("hv_reference_point: empty reference front");
    }
    ObjectiveVector ref = reference_front.front();
    for (const auto& p : reference_front) {
        for (std::size_t i = 0; i < ref.size(); ++i) ref[i] = std::max(ref[i], p[i]);
    }
    for (double& v : ref) v += 0.1;
    return ref;
}

IndicatorReport score_archive(const std::vector<Solution>& archive,
                              const ReferenceSet& reference) {
    std::vector<ObjectiveVector> objs;
    std::vector<DecisionVector> decs;
    objs.reserve(archive.size());
    decs.reserve(archive.size());
    for (const auto& s : archive) {
        objs.push_back(s.f);
        decs.push_back(s.x);
    }
    IndicatorReport r;
    r.archive_size = static_cast<int>(archive.size());
    r.igd_plus = igd_plus(objs, reference.objective_points);
    r.igdx = igdx(decs, reference.decision_points);
    r.hv = hypervolume(objs, hv_reference_point(reference.objective_points));
    return r;
}

} // namespace momm
