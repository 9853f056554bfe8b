#include "frane/kernels.hpp"

#include <algorithm>
#include <cmath>

#include <omp.h>

namespace frane::kernels {

namespace {

// Four interleaved partial sums combined in a fixed order.
template <typename Term>
double accumulate4(std::size_t len, Term term) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        s0 += term(i);
        s1 += term(i + 1);
        s2 += term(i + 2);
        s3 += term(i + 3);
    }
    for (; i < len; ++i) s0 += term(i);
    return (s0 + s1) + (s2 + s3);
}

double correlation_weight(const ColumnBlock& centered, std::span<const double> norms, std::size_t j, std::size_t k) {
    if (norms[j] == 0.0 || norms[k] == 0.0) return 1.0;
    const double corr = dot(centered.column(j), centered.column(k)) / (norms[j] * norms[k]);
    return std::clamp(corr + 1.0, 0.0, 2.0);
}

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) {
    const double* pa = a.data();
    const double* pb = b.data();
    return accumulate4(a.size(), [=](std::size_t i) { return pa[i] * pb[i]; });
}

double distance(Distance kind, std::span<const double> a, std::span<const double> b) {
    const double* pa = a.data();
    const double* pb = b.data();
    switch (kind) {
        case Distance::canberra:
            return accumulate4(a.size(), [=](std::size_t i) {
                const double denom = std::abs(pa[i]) + std::abs(pb[i]);
                return denom == 0.0 ? 0.0 : std::abs(pb[i] - pa[i]) / denom;
            });
        case Distance::chebyshev: {
            double best = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, std::abs(pb[i] - pa[i]));
            return best;
        }
        case Distance::manhattan:
            return accumulate4(a.size(), [=](std::size_t i) { return std::abs(pb[i] - pa[i]); });
        case Distance::euclidean:
            return std::sqrt(accumulate4(a.size(), [=](std::size_t i) {
                const double d = pb[i] - pa[i];
                return d * d;
            }));
    }
    return 0.0;
}

void pairwise_correlation_serial(const ColumnBlock& centered, std::span<const double> norms, std::span<double> out) {
    const std::size_t n = centered.cols;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) out[j * n + k] = correlation_weight(centered, norms, j, k);
    }
}

void pairwise_correlation_omp(const ColumnBlock& centered, std::span<const double> norms, std::span<double> out,
                              int threads) {
    const auto n = static_cast<long>(centered.cols);
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
    for (long j = 0; j < n; ++j) {
        for (long k = j + 1; k < n; ++k) {
            out[j * n + k] = correlation_weight(centered, norms, static_cast<std::size_t>(j), static_cast<std::size_t>(k));
        }
    }
}

void pairwise_distance_serial(Distance kind, const ColumnBlock& cols, std::span<double> out) {
    const std::size_t n = cols.cols;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) out[j * n + k] = distance(kind, cols.column(j), cols.column(k));
    }
}

void pairwise_distance_omp(Distance kind, const ColumnBlock& cols, std::span<double> out, int threads) {
    const auto n = static_cast<long>(cols.cols);
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
    for (long j = 0; j < n; ++j) {
        for (long k = j + 1; k < n; ++k) {
            out[j * n + k] = distance(kind, cols.column(static_cast<std::size_t>(j)), cols.column(static_cast<std::size_t>(k)));
        }
    }
}

namespace {

double pull_one(std::span<const Neighbor> neighbors, std::span<const double> flow) {
    double acc = 0.0;
    for (const auto& nb : neighbors) acc += nb.weight * flow[nb.node];
    return acc;
}

}  // namespace

void pagerank_pull_serial(std::span<const std::vector<Neighbor>> adjacency, std::span<const double> flow,
                          double damping, double base, std::span<double> next) {
    for (std::size_t j = 0; j < adjacency.size(); ++j) next[j] = base + damping * pull_one(adjacency[j], flow);
}

void pagerank_pull_omp(std::span<const std::vector<Neighbor>> adjacency, std::span<const double> flow,
                       double damping, double base, std::span<double> next, int threads) {
    const auto n = static_cast<long>(adjacency.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (long j = 0; j < n; ++j) next[j] = base + damping * pull_one(adjacency[j], flow);
}

}  // namespace frane::kernels
