#include "frane/thresholds.hpp"

#include <algorithm>
#include <cmath>

#include "frane/error.hpp"

namespace frane {

std::string_view to_string(Progression p) {
    switch (p) {
        case Progression::geometric: return "geometric";
        case Progression::linear_min: return "linear_min";
        case Progression::linear_mean: return "linear_mean";
        case Progression::linear_median: return "linear_median";
        case Progression::quantile: return "quantile";
    }
    return "?";
}

std::optional<Progression> parse_progression(std::string_view name) {
    for (const auto p : kAllProgressions) {
        if (to_string(p) == name) return p;
    }
    return std::nullopt;
}

namespace {

void require_iterations(std::size_t iterations) {
    if (iterations < 2) throw Error("threshold schedules need at least 2 iterations, got " + std::to_string(iterations));
}

}  // namespace

ThresholdSchedule geometric_schedule(const OffDiagStats& stats, std::size_t iterations) {
    require_iterations(iterations);
    if (stats.sorted.empty()) throw Error("geometric schedule needs at least one off-diagonal weight");
    const double top = stats.max;
    const double bottom = stats.min;

    // sorted is ascending, so the largest weight strictly below M' gives min(D)
    // and min(W') gives max(D).
    const auto below_top = std::lower_bound(stats.sorted.begin(), stats.sorted.end(), top);
    if (below_top == stats.sorted.begin()) {
        return {{top}, Progression::geometric, iterations};
    }
    const double d_min = top - *std::prev(below_top);
    const double d_max = top - bottom;

    ThresholdSchedule s{std::vector<double>(iterations), Progression::geometric, iterations};
    if (std::prev(below_top) == stats.sorted.begin()) {
        // |D| = 1: the only weight below M' is min(W').
        std::fill(s.values.begin(), s.values.end(), bottom);
        return s;
    }
    const double ratio = d_max / d_min;
    const double span = static_cast<double>(iterations - 1);
    s.values.front() = top - d_min;
    for (std::size_t i = 1; i + 1 < iterations; ++i) {
        const double t = top - d_min * std::pow(ratio, static_cast<double>(i) / span);
        s.values[i] = std::clamp(t, bottom, top);
    }
    s.values.back() = bottom;
    return s;
}

ThresholdSchedule linear_schedule(double a, double b, std::size_t iterations, Progression tag) {
    require_iterations(iterations);
    if (a > b) throw Error("linear schedule needs a <= b");
    ThresholdSchedule s{std::vector<double>(iterations), tag, iterations};
    const double step = (b - a) / static_cast<double>(iterations - 1);
    for (std::size_t i = 0; i + 1 < iterations; ++i) {
        s.values[i] = std::min(step * static_cast<double>(i) + a, b);
    }
    s.values.back() = b;
    return s;
}

ThresholdSchedule quantile_schedule(const std::vector<double>& sorted_offdiag, std::size_t iterations) {
    require_iterations(iterations);
    if (sorted_offdiag.empty()) throw Error("quantile schedule needs a non-empty weight list");
    const std::size_t count = sorted_offdiag.size();
    ThresholdSchedule s{std::vector<double>(iterations), Progression::quantile, iterations};
    for (std::size_t i = 1; i <= iterations; ++i) {
        const std::size_t rank = (i * count + iterations - 1) / iterations;  // ceil(i*N/I), 1-based
        s.values[i - 1] = sorted_offdiag[std::max<std::size_t>(rank, 1) - 1];
    }
    return s;
}

ThresholdSchedule make_schedule(Progression p, const OffDiagStats& stats, std::size_t iterations) {
    switch (p) {
        case Progression::geometric: return geometric_schedule(stats, iterations);
        case Progression::linear_min: return linear_schedule(stats.min, stats.max, iterations, p);
        case Progression::linear_mean: return linear_schedule(stats.mean, stats.max, iterations, p);
        case Progression::linear_median: return linear_schedule(stats.median, stats.max, iterations, p);
        case Progression::quantile: return quantile_schedule(stats.sorted, iterations);
    }
    throw Error("unknown progression");
}

std::vector<IndexedThreshold> sweep_order(const ThresholdSchedule& schedule) {
    std::vector<IndexedThreshold> out;
    out.reserve(schedule.values.size());
    for (std::size_t i = 0; i < schedule.values.size(); ++i) out.push_back({schedule.values[i], i});
    std::stable_sort(out.begin(), out.end(),
                     [](const IndexedThreshold& a, const IndexedThreshold& b) { return a.value > b.value; });
    // Equal values are adjacent and in ascending index order; keep the first.
    out.erase(std::unique(out.begin(), out.end(),
                          [](const IndexedThreshold& a, const IndexedThreshold& b) { return a.value == b.value; }),
              out.end());
    return out;
}

}  // namespace frane
