#include "frane/frane.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "frane/error.hpp"
#include "frane/random.hpp"

namespace frane {

std::string_view to_string(Selection s) { return s == Selection::rqh ? "rqh" : "random"; }

std::optional<Selection> parse_selection(std::string_view name) {
    if (name == "rqh") return Selection::rqh;
    if (name == "random") return Selection::random;
    return std::nullopt;
}

double rqh(std::span<const double> scores) {
    if (scores.size() < kMinFeatures) throw Error("RQH needs at least 3 scores");
    // The median of the three smallest (largest) scores is the second smallest (largest).
    std::vector<double> s(scores.begin(), scores.end());
    const auto n = static_cast<std::ptrdiff_t>(s.size());
    std::nth_element(s.begin(), s.begin() + 1, s.end());
    const double low = s[1];
    std::nth_element(s.begin(), s.begin() + (n - 2), s.end());
    const double high = s[static_cast<std::size_t>(n - 2)];
    return high / low;
}

std::vector<std::size_t> FeatureRanking::top(std::size_t count) const {
    count = std::min(count, order.size());
    return {order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::size_t select_best(std::span<const RankingCandidate> candidates, Selection selection, std::uint64_t seed) {
    if (candidates.empty()) throw Error("no candidate rankings to select from");
    if (selection == Selection::random) {
        Rng rng(seed);
        return static_cast<std::size_t>(uniform_index(rng, candidates.size()));
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        const auto& c = candidates[i];
        const auto& b = candidates[best];
        if (c.rqh > b.rqh || (c.rqh == b.rqh && c.schedule_index < b.schedule_index)) best = i;
    }
    return best;
}

std::vector<std::size_t> importance_order(std::span<const double> importances) {
    std::vector<std::size_t> order(importances.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return importances[a] > importances[b]; });
    return order;
}

FraneResult run_frane(const SimilarityMatrix& w, const std::vector<std::string>& feature_names,
                      const FraneConfig& config) {
    const std::size_t n = w.size();
    if (n < kMinFeatures) throw Error("need at least 3 features, got " + std::to_string(n));
    if (feature_names.size() != n) throw Error("feature name count does not match the similarity matrix");

    const auto stats = offdiag_stats(w);
    const auto schedule = make_schedule(config.progression, stats, config.iterations);
    const auto edges = build_edge_list(w);
    const PageRankOptions pr_options{config.damping, config.pagerank_tolerance, config.pagerank_max_iterations,
                                     config.parallelism};

    FraneResult result;
    ThresholdGraph graph(n);
    for (const auto& t : sweep_order(schedule)) {
        graph.advance_to(edges, t.value);
        const double degree = average_degree(graph);
        if (degree < config.min_avg_degree) continue;
        RankingCandidate c;
        c.threshold = t.value;
        c.scores = weighted_pagerank(graph, pr_options);
        c.avg_degree = degree;
        c.rqh = rqh(c.scores.scores);
        c.schedule_index = t.schedule_index;
        result.candidates.push_back(std::move(c));
    }
    if (result.candidates.empty()) {
        std::ostringstream msg;
        msg << "no qualifying graph: minimum average degree " << config.min_avg_degree
            << " exceeds every threshold graph for n = " << n << " (complete graph has " << (n - 1) / 2.0 << ")";
        throw Error(msg.str());
    }
    std::sort(result.candidates.begin(), result.candidates.end(),
              [](const RankingCandidate& a, const RankingCandidate& b) { return a.schedule_index < b.schedule_index; });

    const auto& chosen = result.candidates[select_best(result.candidates, config.selection, config.seed)];
    auto& r = result.ranking;
    r.feature_names = feature_names;
    r.importances = chosen.scores.scores;
    r.order = importance_order(r.importances);
    r.chosen_threshold = chosen.threshold;
    r.chosen_rqh = chosen.rqh;
    r.chosen_schedule_index = chosen.schedule_index;
    return result;
}

FraneResult run_frane(const DataMatrix& x, const FraneConfig& config) {
    if (x.cols() < kMinFeatures) throw Error("need at least 3 features, got " + std::to_string(x.cols()));
    return run_frane(compute_similarity(x, config.similarity, config.parallelism), x.feature_names(), config);
}

std::vector<Edge> graph_edges_at(const SimilarityMatrix& w, double threshold) {
    const auto edges = build_edge_list(w);
    ThresholdGraph g(w.size());
    g.advance_to(edges, threshold);
    return g.active_edges(edges);
}

}  // namespace frane
