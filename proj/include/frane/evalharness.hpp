#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "frane/dataset.hpp"
#include "frane/frane.hpp"
#include "frane/parallel.hpp"

namespace frane {

struct EvalConfig {
    std::size_t folds = 10;
    std::size_t k_neighbors = 5;
    std::vector<std::size_t> n_prime_list{16};
    std::uint64_t seed = 0;
    Parallelism parallelism{};
};

struct EvalReport {
    std::vector<std::size_t> n_prime_list;
    std::vector<std::vector<double>> per_fold_rmae;  // [fold][n' position]
    std::vector<double> mean_rmae;                   // per n' position
    std::size_t zero_variance_exclusions = 0;        // summed over folds and n'
};

/// Row-major m_test x n matrix of predictions.
struct Prediction {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;

    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
};

/// kNN reconstruction: each test row is predicted (all n features) as the mean
/// of its k nearest train rows, with Euclidean distance over the `selected`
/// columns only. Distance ties go to the lower train row index; with fewer than
/// k train rows all of them are used.
Prediction knn_reconstruct(const DataMatrix& train, const DataMatrix& test, std::span<const std::size_t> selected,
                           std::size_t k, Parallelism par = {});

/// Population standard deviation (divisor m) of each column. Exactly constant
/// columns get 0.
std::vector<double> column_std(const DataMatrix& x);

struct RmaeResult {
    double value = 0.0;
    std::size_t excluded_features = 0;  // features skipped for sigma == 0
};

/// Mean over features with sigma > 0 of mean_i |pred - actual| / sigma.
RmaeResult rmae(const Prediction& predicted, const DataMatrix& actual, std::span<const double> sigma);

using Ranker = std::function<FeatureRanking(const DataMatrix&)>;

/// Cross-validated top-n' reconstruction error. Each fold ranks on its train
/// part, reconstructs the test part from the top n' features, and scores it
/// with train-side sigma.
EvalReport evaluate_ranking(const DataMatrix& x, const Ranker& ranker, const EvalConfig& config);

/// n' grid for error curves: 1, 2, 4, ..., 2^k <= n, plus n.
std::vector<std::size_t> error_curve_points(std::size_t n);

}  // namespace frane
