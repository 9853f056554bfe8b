#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frane/dataset.hpp"
#include "frane/parallel.hpp"

namespace frane {

enum class SimilarityMeasure { pearson, canberra, chebyshev, manhattan, euclidean };

std::string_view to_string(SimilarityMeasure m);
std::optional<SimilarityMeasure> parse_similarity(std::string_view name);
inline constexpr SimilarityMeasure kAllSimilarities[] = {
    SimilarityMeasure::pearson, SimilarityMeasure::canberra, SimilarityMeasure::chebyshev,
    SimilarityMeasure::manhattan, SimilarityMeasure::euclidean};

/// Symmetric, non-negative n x n feature-similarity matrix.
class SimilarityMatrix {
public:
    SimilarityMatrix(std::size_t n, SimilarityMeasure measure, std::vector<double> weights);

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] SimilarityMeasure measure() const { return measure_; }
    [[nodiscard]] double operator()(std::size_t j, std::size_t k) const { return weights_[j * n_ + k]; }
    [[nodiscard]] const std::vector<double>& weights() const { return weights_; }

private:
    std::size_t n_;
    SimilarityMeasure measure_;
    std::vector<double> weights_;
};

/// w[j][k] = corr(f_j, f_k) + 1, clamped to [0, 2]. A constant feature has
/// correlation 0 with everything (weight 1), including itself.
SimilarityMatrix pearson_similarity(const DataMatrix& x, Parallelism par = {});

/// w[j][k] = M' - d(f_j, f_k) where M' is the largest distance between two
/// distinct features; the diagonal is M'. Canberra terms with a zero
/// denominator contribute 0. Distances use raw (unscaled) values.
SimilarityMatrix distance_similarity(const DataMatrix& x, SimilarityMeasure kind, Parallelism par = {});

/// Dispatch on measure.
SimilarityMatrix compute_similarity(const DataMatrix& x, SimilarityMeasure measure, Parallelism par = {});

/// Statistics over the off-diagonal multiset W' = {w[j][k] : j < k}.
struct OffDiagStats {
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    double median = 0.0;
    std::vector<double> sorted;  // ascending, C(n,2) entries
};

OffDiagStats offdiag_stats(const SimilarityMatrix& w);
/// Same statistics from an arbitrary non-empty multiset of weights.
OffDiagStats stats_from_values(std::vector<double> values);

// Text cache format:
//   frane-similarity <n> <measure>
//   n lines of n comma-separated weights (shortest round-trip formatting)
void write_similarity(std::ostream& out, const SimilarityMatrix& w);
SimilarityMatrix read_similarity(std::istream& in);

}  // namespace frane
