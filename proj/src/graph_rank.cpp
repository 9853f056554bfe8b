#include "frane/graph_rank.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>

#include "frane/error.hpp"

namespace frane {

EdgeList build_edge_list(const SimilarityMatrix& w) {
    const std::size_t n = w.size();
    if (n < 2) throw Error("edge list needs at least two features");
    EdgeList list{n, {}};
    list.edges.reserve(n * (n - 1) / 2);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) list.edges.push_back({j, k, w(j, k)});
    }
    // Pairs are generated in (j, k) order, so a stable sort keeps that as the tie order.
    std::stable_sort(list.edges.begin(), list.edges.end(),
                     [](const Edge& a, const Edge& b) { return a.weight > b.weight; });
    return list;
}

ThresholdGraph::ThresholdGraph(std::size_t n)
    : adjacency_(n), degree_(n, 0.0), last_threshold_(std::numeric_limits<double>::infinity()) {}

std::size_t ThresholdGraph::advance_to(const EdgeList& edges, double t) {
    if (edges.n != adjacency_.size()) throw Error("edge list and graph disagree on node count");
    if (t > last_threshold_) throw Error("threshold sweep must be non-increasing");
    last_threshold_ = t;
    const std::size_t before = active_;
    while (active_ < edges.edges.size() && edges.edges[active_].weight >= t) {
        const auto& e = edges.edges[active_];
        adjacency_[e.j].push_back({e.k, e.weight});
        adjacency_[e.k].push_back({e.j, e.weight});
        degree_[e.j] += e.weight;
        degree_[e.k] += e.weight;
        ++active_;
    }
    return active_ - before;
}

std::vector<Edge> ThresholdGraph::active_edges(const EdgeList& edges) const {
    return {edges.edges.begin(), edges.edges.begin() + static_cast<std::ptrdiff_t>(active_)};
}

double average_degree(const ThresholdGraph& g) {
    return static_cast<double>(g.active_edge_count()) / static_cast<double>(g.node_count());
}

ScoreVector weighted_pagerank(const ThresholdGraph& g, const PageRankOptions& options) {
    if (!(options.damping > 0.0 && options.damping < 1.0)) throw Error("damping must lie in (0, 1)");
    if (!(options.tolerance > 0.0)) throw Error("PageRank tolerance must be positive");
    const std::size_t n = g.node_count();
    const double inv_n = 1.0 / static_cast<double>(n);
    const double d = options.damping;
    const auto& degree = g.weighted_degree();
    const bool serial = options.parallelism.serial() || n < 256;
    const int threads = resolve_threads(options.parallelism);

    ScoreVector out{std::vector<double>(n, inv_n), d, 0, false};
    auto& pr = out.scores;
    std::vector<double> next(n);
    std::vector<double> flow(n);

    while (out.iterations < options.max_iterations) {
        double dangling = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (degree[k] > 0.0) {
                flow[k] = pr[k] / degree[k];
            } else {
                flow[k] = 0.0;
                dangling += pr[k];
            }
        }
        const double base = (1.0 - d) * inv_n + d * dangling * inv_n;
        if (serial) {
            kernels::pagerank_pull_serial(g.adjacency(), flow, d, base, next);
        } else {
            kernels::pagerank_pull_omp(g.adjacency(), flow, d, base, next, threads);
        }
        double change = 0.0;
        for (std::size_t j = 0; j < n; ++j) change += std::abs(next[j] - pr[j]);
        pr.swap(next);
        ++out.iterations;
        if (change < options.tolerance) {
            out.converged = true;
            break;
        }
    }
    return out;
}

void write_edge_list(std::ostream& out, const std::vector<Edge>& edges) {
    char buf[64];
    for (const auto& e : edges) {
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, e.weight);
        out << e.j << ' ' << e.k << ' ';
        out.write(buf, ptr - buf);
        out << '\n';
    }
}

}  // namespace frane
