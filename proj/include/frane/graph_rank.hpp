#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "frane/kernels.hpp"
#include "frane/parallel.hpp"
#include "frane/similarity.hpp"

namespace frane {

struct Edge {
    std::size_t j;
    std::size_t k;  // j < k
    double weight;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// All C(n,2) feature pairs sorted by weight descending, ties by (j, k).
struct EdgeList {
    std::size_t n = 0;
    std::vector<Edge> edges;
};

EdgeList build_edge_list(const SimilarityMatrix& w);

using kernels::Neighbor;

/// Attribute graph G(t) grown by a descending threshold sweep over an EdgeList.
/// Edge (j, k, w) is active iff w >= the last threshold applied. Over a full
/// sweep every edge is touched once, so total work is O(n^2).
class ThresholdGraph {
public:
    explicit ThresholdGraph(std::size_t n);

    /// Activate every inactive edge with weight >= t. Thresholds must be
    /// non-increasing across calls. Returns the number of edges activated.
    std::size_t advance_to(const EdgeList& edges, double t);

    [[nodiscard]] std::size_t node_count() const { return adjacency_.size(); }
    [[nodiscard]] std::size_t active_edge_count() const { return active_; }
    [[nodiscard]] const std::vector<std::vector<Neighbor>>& adjacency() const { return adjacency_; }
    [[nodiscard]] const std::vector<double>& weighted_degree() const { return degree_; }

    /// Active edges in activation order (the first active_edge_count() of the list).
    [[nodiscard]] std::vector<Edge> active_edges(const EdgeList& edges) const;

private:
    std::vector<std::vector<Neighbor>> adjacency_;
    std::vector<double> degree_;
    std::size_t active_ = 0;
    double last_threshold_;
};

/// Undirected edge count divided by node count.
double average_degree(const ThresholdGraph& g);

struct PageRankOptions {
    double damping = 0.85;
    double tolerance = 1e-8;  // L1 change between iterates
    std::size_t max_iterations = 100;
    Parallelism parallelism{};
};

struct ScoreVector {
    std::vector<double> scores;
    double damping = 0.85;
    std::size_t iterations = 0;
    bool converged = false;
};

/// Weighted PageRank by power iteration from the uniform vector:
///   PR(j) = (1-d)/n + d * [ sum_{k~j} w_kj / deg(k) * PR(k) + sum_{deg(k)=0} PR(k)/n ]
/// Nodes with zero weighted degree are dangling and spread their mass uniformly.
/// Stops when the L1 change drops below the tolerance or after max_iterations,
/// in which case `converged` is false.
ScoreVector weighted_pagerank(const ThresholdGraph& g, const PageRankOptions& options = {});

/// Debug dump: one "j k w" line per active edge.
void write_edge_list(std::ostream& out, const std::vector<Edge>& edges);

}  // namespace frane
