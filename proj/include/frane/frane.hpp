#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frane/dataset.hpp"
#include "frane/graph_rank.hpp"
#include "frane/similarity.hpp"
#include "frane/thresholds.hpp"

namespace frane {

enum class Selection { rqh, random };

std::string_view to_string(Selection s);
std::optional<Selection> parse_selection(std::string_view name);

struct FraneConfig {
    SimilarityMeasure similarity = SimilarityMeasure::pearson;
    Progression progression = Progression::geometric;
    std::size_t iterations = 100;
    double min_avg_degree = 1.0;
    double damping = 0.85;
    Selection selection = Selection::rqh;
    std::uint64_t seed = 0;
    double pagerank_tolerance = 1e-8;
    std::size_t pagerank_max_iterations = 100;
    Parallelism parallelism{};
};

/// Ranking quality heuristic: median of the three largest scores divided by the
/// median of the three smallest. Needs at least three scores.
double rqh(std::span<const double> scores);

struct RankingCandidate {
    double threshold = 0.0;
    ScoreVector scores;
    double avg_degree = 0.0;
    double rqh = 0.0;
    std::size_t schedule_index = 0;
};

struct FeatureRanking {
    std::vector<std::string> feature_names;
    std::vector<double> importances;
    std::vector<std::size_t> order;  // indices by importance descending, ties by index
    double chosen_threshold = 0.0;
    double chosen_rqh = 0.0;
    std::size_t chosen_schedule_index = 0;

    /// First `count` entries of `order`.
    [[nodiscard]] std::vector<std::size_t> top(std::size_t count) const;
};

struct FraneResult {
    FeatureRanking ranking;
    std::vector<RankingCandidate> candidates;  // ascending schedule_index
};

/// Pick a candidate: highest RQH with ties to the lowest schedule index, or a
/// seeded uniform draw. Returns an index into `candidates`.
std::size_t select_best(std::span<const RankingCandidate> candidates, Selection selection, std::uint64_t seed);

/// Order of feature indices by importance descending, ties by ascending index.
std::vector<std::size_t> importance_order(std::span<const double> importances);

/// Rank features given a precomputed similarity matrix.
FraneResult run_frane(const SimilarityMatrix& w, const std::vector<std::string>& feature_names,
                      const FraneConfig& config);
/// Full pipeline: similarity, threshold schedule, sweep with PageRank per
/// qualifying threshold, and selection.
FraneResult run_frane(const DataMatrix& x, const FraneConfig& config);

/// Edges of G(t) for inspection.
std::vector<Edge> graph_edges_at(const SimilarityMatrix& w, double threshold);

}  // namespace frane
