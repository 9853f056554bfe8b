#include "frane/similarity.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "frane/error.hpp"
#include "frane/kernels.hpp"

namespace frane {

std::string_view to_string(SimilarityMeasure m) {
    switch (m) {
        case SimilarityMeasure::pearson: return "pearson";
        case SimilarityMeasure::canberra: return "canberra";
        case SimilarityMeasure::chebyshev: return "chebyshev";
        case SimilarityMeasure::manhattan: return "manhattan";
        case SimilarityMeasure::euclidean: return "euclidean";
    }
    return "?";
}

std::optional<SimilarityMeasure> parse_similarity(std::string_view name) {
    for (const auto m : kAllSimilarities) {
        if (to_string(m) == name) return m;
    }
    return std::nullopt;
}

SimilarityMatrix::SimilarityMatrix(std::size_t n, SimilarityMeasure measure, std::vector<double> weights)
    : n_(n), measure_(measure), weights_(std::move(weights)) {
    if (weights_.size() != n_ * n_) throw Error("similarity matrix size does not match n");
}

namespace {

kernels::Distance to_distance(SimilarityMeasure m) {
    switch (m) {
        case SimilarityMeasure::canberra: return kernels::Distance::canberra;
        case SimilarityMeasure::chebyshev: return kernels::Distance::chebyshev;
        case SimilarityMeasure::manhattan: return kernels::Distance::manhattan;
        case SimilarityMeasure::euclidean: return kernels::Distance::euclidean;
        case SimilarityMeasure::pearson: break;
    }
    throw Error("pearson is not a distance measure");
}

void mirror_upper(std::vector<double>& w, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) w[k * n + j] = w[j * n + k];
    }
}

bool is_constant(std::span<const double> column) {
    return std::all_of(column.begin(), column.end(), [&](double v) { return v == column.front(); });
}

}  // namespace

SimilarityMatrix pearson_similarity(const DataMatrix& x, Parallelism par) {
    const std::size_t m = x.rows();
    const std::size_t n = x.cols();
    auto centered = x.column_major();
    std::vector<double> norms(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        std::span<double> col(centered.data() + j * m, m);
        // Exact constancy check: a computed mean rarely reproduces the value bit for bit.
        if (is_constant(col)) {
            std::fill(col.begin(), col.end(), 0.0);
            continue;
        }
        const double mean = std::accumulate(col.begin(), col.end(), 0.0) / static_cast<double>(m);
        for (auto& v : col) v -= mean;
        norms[j] = std::sqrt(kernels::dot(col, col));
    }

    std::vector<double> w(n * n, 0.0);
    const kernels::ColumnBlock block{centered, m, n};
    if (par.serial()) {
        kernels::pairwise_correlation_serial(block, norms, w);
    } else {
        kernels::pairwise_correlation_omp(block, norms, w, resolve_threads(par));
    }
    mirror_upper(w, n);
    for (std::size_t j = 0; j < n; ++j) w[j * n + j] = norms[j] == 0.0 ? 1.0 : 2.0;
    return {n, SimilarityMeasure::pearson, std::move(w)};
}

SimilarityMatrix distance_similarity(const DataMatrix& x, SimilarityMeasure kind, Parallelism par) {
    const auto dist_kind = to_distance(kind);
    const std::size_t n = x.cols();
    const auto cols = x.column_major();
    const kernels::ColumnBlock block{cols, x.rows(), n};

    std::vector<double> d(n * n, 0.0);
    if (par.serial()) {
        kernels::pairwise_distance_serial(dist_kind, block, d);
    } else {
        kernels::pairwise_distance_omp(dist_kind, block, d, resolve_threads(par));
    }

    double max_dist = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) max_dist = std::max(max_dist, d[j * n + k]);
    }
    for (std::size_t j = 0; j < n; ++j) {
        d[j * n + j] = max_dist;
        for (std::size_t k = j + 1; k < n; ++k) d[j * n + k] = max_dist - d[j * n + k];
    }
    mirror_upper(d, n);
    return {n, kind, std::move(d)};
}

SimilarityMatrix compute_similarity(const DataMatrix& x, SimilarityMeasure measure, Parallelism par) {
    return measure == SimilarityMeasure::pearson ? pearson_similarity(x, par) : distance_similarity(x, measure, par);
}

OffDiagStats stats_from_values(std::vector<double> values) {
    if (values.empty()) throw Error("off-diagonal statistics need at least two features");
    OffDiagStats s;
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    std::sort(values.begin(), values.end());
    s.min = values.front();
    s.max = values.back();
    const std::size_t mid = values.size() / 2;
    s.median = values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
    s.sorted = std::move(values);
    return s;
}

OffDiagStats offdiag_stats(const SimilarityMatrix& w) {
    const std::size_t n = w.size();
    std::vector<double> values;
    values.reserve(n * (n - 1) / 2);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) values.push_back(w(j, k));
    }
    return stats_from_values(std::move(values));
}

void write_similarity(std::ostream& out, const SimilarityMatrix& w) {
    const std::size_t n = w.size();
    out << "frane-similarity " << n << ' ' << to_string(w.measure()) << '\n';
    char buf[64];
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, w(j, k));
            if (k) out << ',';
            out.write(buf, ptr - buf);
        }
        out << '\n';
    }
}

SimilarityMatrix read_similarity(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw Error("similarity cache: missing header line");
    std::istringstream header(line);
    std::string tag;
    std::size_t n = 0;
    std::string measure_name;
    if (!(header >> tag >> n >> measure_name) || tag != "frane-similarity" || n == 0) {
        throw Error("similarity cache: malformed header '" + line + "'");
    }
    const auto measure = parse_similarity(measure_name);
    if (!measure) throw Error("similarity cache: unknown measure '" + measure_name + "'");

    std::vector<double> w;
    w.reserve(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        if (!std::getline(in, line)) throw Error("similarity cache: expected " + std::to_string(n) + " rows");
        const char* p = line.data();
        const char* end = line.data() + line.size();
        for (std::size_t k = 0; k < n; ++k) {
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(p, end, v);
            if (ec != std::errc{} || !std::isfinite(v) || v < 0.0) {
                throw Error("similarity cache: bad value at row " + std::to_string(j) + ", column " + std::to_string(k));
            }
            w.push_back(v);
            p = ptr;
            if (k + 1 < n) {
                if (p == end || *p != ',') throw Error("similarity cache: row " + std::to_string(j) + " too short");
                ++p;
            }
        }
        if (p != end) throw Error("similarity cache: row " + std::to_string(j) + " too long");
    }
    return {n, *measure, std::move(w)};
}

}  // namespace frane
