#include "frane/evalharness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "frane/error.hpp"

namespace frane {

namespace {

struct Candidate {
    double dist;
    std::size_t row;

    bool operator<(const Candidate& o) const { return dist < o.dist || (dist == o.dist && row < o.row); }
};

void predict_row(const DataMatrix& train, std::span<const double> query, std::span<const std::size_t> selected,
                 std::size_t k, std::vector<Candidate>& scratch, std::span<double> out) {
    scratch.clear();
    for (std::size_t r = 0; r < train.rows(); ++r) {
        const auto row = train.row(r);
        double d2 = 0.0;
        for (const auto c : selected) {
            const double diff = row[c] - query[c];
            d2 += diff * diff;
        }
        scratch.push_back({d2, r});
    }
    const std::size_t used = std::min(k, scratch.size());
    std::partial_sort(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(used), scratch.end());
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t i = 0; i < used; ++i) {
        const auto row = train.row(scratch[i].row);
        for (std::size_t c = 0; c < out.size(); ++c) out[c] += row[c];
    }
    for (auto& v : out) v /= static_cast<double>(used);
}

}  // namespace

Prediction knn_reconstruct(const DataMatrix& train, const DataMatrix& test, std::span<const std::size_t> selected,
                           std::size_t k, Parallelism par) {
    if (selected.empty()) throw Error("kNN reconstruction needs at least one selected feature");
    if (k == 0) throw Error("kNN reconstruction needs k >= 1");
    if (train.cols() != test.cols()) throw Error("train and test column counts differ");
    for (const auto c : selected) {
        if (c >= train.cols()) throw Error("selected feature index out of range");
    }
    const std::size_t n = train.cols();
    Prediction pred{test.rows(), n, std::vector<double>(test.rows() * n)};
    const auto rows = static_cast<long>(test.rows());
    const int threads = par.serial() ? 1 : resolve_threads(par);
#pragma omp parallel num_threads(threads)
    {
        std::vector<Candidate> scratch;
        scratch.reserve(train.rows());
#pragma omp for schedule(static)
        for (long i = 0; i < rows; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            predict_row(train, test.row(idx), selected, k, scratch, {pred.values.data() + idx * n, n});
        }
    }
    return pred;
}

std::vector<double> column_std(const DataMatrix& x) {
    const std::size_t m = x.rows();
    std::vector<double> sigma(x.cols(), 0.0);
    for (std::size_t j = 0; j < x.cols(); ++j) {
        bool constant = true;
        double sum = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            sum += x(i, j);
            constant = constant && x(i, j) == x(0, j);
        }
        if (constant) continue;
        const double mean = sum / static_cast<double>(m);
        double ss = 0.0;
        for (std::size_t i = 0; i < m; ++i) ss += (x(i, j) - mean) * (x(i, j) - mean);
        sigma[j] = std::sqrt(ss / static_cast<double>(m));
    }
    return sigma;
}

RmaeResult rmae(const Prediction& predicted, const DataMatrix& actual, std::span<const double> sigma) {
    if (predicted.rows != actual.rows() || predicted.cols != actual.cols()) {
        throw Error("prediction and test shapes differ");
    }
    if (sigma.size() != actual.cols()) throw Error("sigma length differs from feature count");
    RmaeResult result;
    double total = 0.0;
    std::size_t used = 0;
    for (std::size_t j = 0; j < actual.cols(); ++j) {
        if (!(sigma[j] > 0.0)) {
            ++result.excluded_features;
            continue;
        }
        double abs_sum = 0.0;
        for (std::size_t i = 0; i < actual.rows(); ++i) abs_sum += std::abs(predicted(i, j) - actual(i, j));
        total += abs_sum / static_cast<double>(actual.rows()) / sigma[j];
        ++used;
    }
    if (used == 0) throw Error("RMAE undefined: every feature has zero variance on the train split");
    result.value = total / static_cast<double>(used);
    return result;
}

EvalReport evaluate_ranking(const DataMatrix& x, const Ranker& ranker, const EvalConfig& config) {
    if (config.folds < 2) throw Error("evaluation needs at least 2 folds");
    if (config.k_neighbors < 1) throw Error("evaluation needs k >= 1");
    if (config.n_prime_list.empty()) throw Error("evaluation needs at least one n' value");
    for (const auto np : config.n_prime_list) {
        if (np < 1 || np > x.cols()) {
            throw UsageError("n' = " + std::to_string(np) + " outside [1, " + std::to_string(x.cols()) + "]");
        }
    }

    const auto split = split_folds(x.rows(), config.folds, config.seed);
    EvalReport report;
    report.n_prime_list = config.n_prime_list;
    report.per_fold_rmae.assign(config.folds, std::vector<double>(config.n_prime_list.size()));
    for (std::size_t fold = 0; fold < config.folds; ++fold) {
        const auto [train, test] = take_fold(x, split, fold);
        const auto ranking = ranker(train);
        if (ranking.order.size() != x.cols()) throw Error("ranker returned a ranking of the wrong length");
        const auto sigma = column_std(train);
        for (std::size_t p = 0; p < config.n_prime_list.size(); ++p) {
            const auto selected = ranking.top(config.n_prime_list[p]);
            const auto pred = knn_reconstruct(train, test, selected, config.k_neighbors, config.parallelism);
            const auto score = rmae(pred, test, sigma);
            report.per_fold_rmae[fold][p] = score.value;
            report.zero_variance_exclusions += score.excluded_features;
        }
    }
    report.mean_rmae.assign(config.n_prime_list.size(), 0.0);
    for (std::size_t p = 0; p < config.n_prime_list.size(); ++p) {
        double sum = 0.0;
        for (const auto& row : report.per_fold_rmae) sum += row[p];
        report.mean_rmae[p] = sum / static_cast<double>(config.folds);
    }
    return report;
}

std::vector<std::size_t> error_curve_points(std::size_t n) {
    if (n == 0) throw Error("error curve needs n >= 1");
    std::vector<std::size_t> points;
    for (std::size_t p = 1; p <= n; p *= 2) points.push_back(p);
    if (points.back() != n) points.push_back(n);
    return points;
}

}  // namespace frane
