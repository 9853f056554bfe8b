#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace frane {

/// Dense m x n table of finite reals with one distinct name per column
/// (feature). Stored row-major. Immutable after construction. The n >= 3
/// requirement of the ranking pipeline is enforced by load_csv and run_frane,
/// not here, so evaluation code can work on narrower tables.
class DataMatrix {
public:
    DataMatrix(std::size_t rows, std::size_t cols, std::vector<double> values,
               std::vector<std::string> feature_names);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }
    [[nodiscard]] std::span<const double> row(std::size_t i) const {
        return {values_.data() + i * cols_, cols_};
    }
    [[nodiscard]] const std::vector<double>& values() const { return values_; }
    [[nodiscard]] const std::vector<std::string>& feature_names() const { return names_; }

    /// Column-major copy: feature j occupies [j*rows, (j+1)*rows).
    [[nodiscard]] std::vector<double> column_major() const;

    /// New matrix holding the given rows, in the given order.
    [[nodiscard]] DataMatrix select_rows(std::span<const std::size_t> row_indices) const;

    friend bool operator==(const DataMatrix&, const DataMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> values_;
    std::vector<std::string> names_;
};

/// Minimum feature count accepted by the ranking pipeline (the ranking quality
/// heuristic takes medians of the three largest and three smallest scores).
inline constexpr std::size_t kMinFeatures = 3;

/// Parse a comma-separated file with a header row. Columns named in
/// `ignore_columns` (e.g. class labels) are dropped. Every remaining cell must
/// parse as a finite real.
DataMatrix load_csv(const std::filesystem::path& path, const std::vector<std::string>& ignore_columns = {});
DataMatrix parse_csv(std::istream& in, const std::vector<std::string>& ignore_columns = {},
                     const std::string& source_name = "<stream>");

/// Write header + rows using shortest round-trip number formatting.
void write_csv(std::ostream& out, const DataMatrix& x);

/// Cross-validation fold assignment for m rows.
struct FoldSplit {
    std::size_t fold_count = 0;
    std::vector<std::size_t> assignments;  // length m, values in [0, fold_count)
    std::uint64_t seed = 0;

    /// Row indices (ascending) assigned to `fold`.
    [[nodiscard]] std::vector<std::size_t> test_rows(std::size_t fold) const;
    /// Row indices (ascending) not assigned to `fold`.
    [[nodiscard]] std::vector<std::size_t> train_rows(std::size_t fold) const;
};

/// Shuffle row indices with a seeded mt19937_64 Fisher-Yates pass, then deal
/// them round-robin into `fold_count` folds, so fold sizes differ by at most one.
FoldSplit split_folds(std::size_t m, std::size_t fold_count, std::uint64_t seed);

struct TrainTest {
    DataMatrix train;
    DataMatrix test;
};

/// Split X by fold: test = rows in `fold`, train = the rest. Relative row order
/// is preserved in both parts.
TrainTest take_fold(const DataMatrix& x, const FoldSplit& split, std::size_t fold);

}  // namespace frane
