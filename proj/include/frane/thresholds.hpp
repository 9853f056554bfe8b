#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "frane/similarity.hpp"

namespace frane {

enum class Progression { geometric, linear_min, linear_mean, linear_median, quantile };

std::string_view to_string(Progression p);
std::optional<Progression> parse_progression(std::string_view name);
inline constexpr Progression kAllProgressions[] = {Progression::geometric, Progression::linear_min,
                                                   Progression::linear_mean, Progression::linear_median,
                                                   Progression::quantile};

/// Ordered edge-weight thresholds. Geometric schedules descend; linear and
/// quantile schedules ascend. Every value lies in [min W', max W'].
struct ThresholdSchedule {
    std::vector<double> values;
    Progression progression = Progression::geometric;
    std::size_t iterations = 0;
};

/// Geometric progression over the dissimilarities D = {M' - w : w in W', w < M'}
/// (a set, so duplicates are dropped):
///   t_i = M' - min(D) * (max(D) / min(D))^((i-1)/(I-1)),  i = 1..I.
/// t_1 is exactly M' - min(D) and t_I is pinned to min(W'), so the last graph
/// is complete. Empty D (all weights equal) yields the single threshold [M'].
ThresholdSchedule geometric_schedule(const OffDiagStats& stats, std::size_t iterations);

/// I evenly spaced values from a to b inclusive; the last value is exactly b.
ThresholdSchedule linear_schedule(double a, double b, std::size_t iterations,
                                  Progression tag = Progression::linear_min);

/// Nearest-rank quantiles: t_i = sorted[ceil(i * N / I) - 1].
ThresholdSchedule quantile_schedule(const std::vector<double>& sorted_offdiag, std::size_t iterations);

/// Build the schedule for any progression from off-diagonal statistics.
ThresholdSchedule make_schedule(Progression p, const OffDiagStats& stats, std::size_t iterations);

/// A threshold value together with the index of its first occurrence in the schedule.
struct IndexedThreshold {
    double value;
    std::size_t schedule_index;
};

/// Distinct schedule values (first occurrence kept), ordered by descending
/// value, ready for an edge-adding sweep.
std::vector<IndexedThreshold> sweep_order(const ThresholdSchedule& schedule);

}  // namespace frane
