#pragma once

// Data-parallel inner loops. Every kernel has a serial reference and an OpenMP
// variant. Both evaluate the same per-item routine in the same order, so their
// outputs are bit-identical for any thread count.

#include <cstddef>
#include <span>
#include <vector>

namespace frane::kernels {

enum class Distance { canberra, chebyshev, manhattan, euclidean };

/// Column-major feature block: feature j is values[j*rows .. (j+1)*rows).
struct ColumnBlock {
    std::span<const double> values;
    std::size_t rows = 0;
    std::size_t cols = 0;

    [[nodiscard]] std::span<const double> column(std::size_t j) const { return values.subspan(j * rows, rows); }
};

double dot(std::span<const double> a, std::span<const double> b);
double distance(Distance kind, std::span<const double> a, std::span<const double> b);

// Pairwise kernels fill out[j*n + k] for j < k only (out is n*n row-major).
// `centered` holds mean-centred columns and `norms` their Euclidean norms; a
// zero norm marks a constant feature, whose correlations are defined as 0.
void pairwise_correlation_serial(const ColumnBlock& centered, std::span<const double> norms, std::span<double> out);
void pairwise_correlation_omp(const ColumnBlock& centered, std::span<const double> norms, std::span<double> out,
                              int threads);

void pairwise_distance_serial(Distance kind, const ColumnBlock& cols, std::span<double> out);
void pairwise_distance_omp(Distance kind, const ColumnBlock& cols, std::span<double> out, int threads);

struct Neighbor {
    std::size_t node;
    double weight;

    friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// One PageRank pull step: next[j] = base + damping * sum_{(k,w) in adj[j]} w * flow[k].
void pagerank_pull_serial(std::span<const std::vector<Neighbor>> adjacency, std::span<const double> flow,
                          double damping, double base, std::span<double> next);
void pagerank_pull_omp(std::span<const std::vector<Neighbor>> adjacency, std::span<const double> flow,
                       double damping, double base, std::span<double> next, int threads);

}  // namespace frane::kernels
