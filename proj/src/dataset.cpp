#include "frane/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "frane/error.hpp"
#include "frane/random.hpp"

namespace frane {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    s = s.substr(first, last - first + 1);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(trim(line.substr(start)));
            return out;
        }
        out.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
}

bool parse_real(std::string_view text, double& value) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) return false;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

}  // namespace

DataMatrix::DataMatrix(std::size_t rows, std::size_t cols, std::vector<double> values,
                       std::vector<std::string> feature_names)
    : rows_(rows), cols_(cols), values_(std::move(values)), names_(std::move(feature_names)) {
    if (rows_ == 0 || cols_ == 0) throw Error("data matrix must have at least one row and one column");
    if (values_.size() != rows_ * cols_) throw Error("data matrix value count does not match its shape");
    if (names_.size() != cols_) throw Error("data matrix needs exactly one name per column");
    std::unordered_set<std::string> seen;
    for (const auto& name : names_) {
        if (!seen.insert(name).second) throw Error("duplicate feature name '" + name + "'");
    }
    for (std::size_t idx = 0; idx < values_.size(); ++idx) {
        if (!std::isfinite(values_[idx])) {
            throw Error("non-finite value at row " + std::to_string(idx / cols_) + ", column " +
                        std::to_string(idx % cols_));
        }
    }
}

std::vector<double> DataMatrix::column_major() const {
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out[j * rows_ + i] = values_[i * cols_ + j];
    }
    return out;
}

DataMatrix DataMatrix::select_rows(std::span<const std::size_t> row_indices) const {
    std::vector<double> out;
    out.reserve(row_indices.size() * cols_);
    for (const auto i : row_indices) {
        if (i >= rows_) throw Error("row index out of range");
        const auto r = row(i);
        out.insert(out.end(), r.begin(), r.end());
    }
    return {row_indices.size(), cols_, std::move(out), names_};
}

DataMatrix parse_csv(std::istream& in, const std::vector<std::string>& ignore_columns,
                     const std::string& source_name) {
    std::string line;
    if (!std::getline(in, line)) throw Error(source_name + ": empty file, expected a header row");
    std::vector<std::string> header;
    for (const auto field : split_fields(line)) header.emplace_back(field);

    std::unordered_map<std::string, std::size_t> header_pos;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (!header_pos.emplace(header[c], c).second) {
            throw Error(source_name + ": duplicate header name '" + header[c] + "'");
        }
    }
    std::vector<bool> keep(header.size(), true);
    for (const auto& name : ignore_columns) {
        const auto it = header_pos.find(name);
        if (it == header_pos.end()) throw Error(source_name + ": ignored column '" + name + "' not in header");
        keep[it->second] = false;
    }

    std::vector<std::string> names;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (keep[c]) names.emplace_back(header[c]);
    }
    if (names.size() < kMinFeatures) {
        throw Error(source_name + ": need at least 3 features, found " + std::to_string(names.size()));
    }

    std::vector<double> values;
    std::size_t rows = 0;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != header.size()) {
            throw Error(source_name + ": line " + std::to_string(line_no) + " has " + std::to_string(fields.size()) +
                        " fields, header has " + std::to_string(header.size()));
        }
        for (std::size_t c = 0; c < fields.size(); ++c) {
            if (!keep[c]) continue;
            double v = 0.0;
            if (!parse_real(fields[c], v) || !std::isfinite(v)) {
                throw Error(source_name + ": invalid numeric cell '" + std::string(fields[c]) + "' at row " +
                            std::to_string(rows + 1) + ", column '" + header[c] + "'");
            }
            values.push_back(v);
        }
        ++rows;
    }
    if (rows == 0) throw Error(source_name + ": no data rows");
    return {rows, names.size(), std::move(values), std::move(names)};
}

DataMatrix load_csv(const std::filesystem::path& path, const std::vector<std::string>& ignore_columns) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    return parse_csv(in, ignore_columns, path.string());
}

void write_csv(std::ostream& out, const DataMatrix& x) {
    const auto& names = x.feature_names();
    for (std::size_t j = 0; j < names.size(); ++j) out << (j ? "," : "") << names[j];
    out << '\n';
    char buf[64];
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x(i, j));
            if (j) out << ',';
            out.write(buf, ptr - buf);
        }
        out << '\n';
    }
}

std::vector<std::size_t> FoldSplit::test_rows(std::size_t fold) const {
    if (fold >= fold_count) throw Error("fold index " + std::to_string(fold) + " out of range");
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        if (assignments[i] == fold) rows.push_back(i);
    }
    return rows;
}

std::vector<std::size_t> FoldSplit::train_rows(std::size_t fold) const {
    if (fold >= fold_count) throw Error("fold index " + std::to_string(fold) + " out of range");
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        if (assignments[i] != fold) rows.push_back(i);
    }
    return rows;
}

FoldSplit split_folds(std::size_t m, std::size_t fold_count, std::uint64_t seed) {
    if (fold_count < 2) throw Error("need at least 2 folds");
    if (m < fold_count) {
        throw Error("cannot split " + std::to_string(m) + " rows into " + std::to_string(fold_count) + " folds");
    }
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Rng rng(seed);
    for (std::size_t i = m - 1; i > 0; --i) {
        std::swap(perm[i], perm[uniform_index(rng, i + 1)]);
    }
    FoldSplit split{fold_count, std::vector<std::size_t>(m), seed};
    for (std::size_t pos = 0; pos < m; ++pos) split.assignments[perm[pos]] = pos % fold_count;
    return split;
}

TrainTest take_fold(const DataMatrix& x, const FoldSplit& split, std::size_t fold) {
    if (split.assignments.size() != x.rows()) throw Error("fold split does not match the data row count");
    const auto train = split.train_rows(fold);
    const auto test = split.test_rows(fold);
    return {x.select_rows(train), x.select_rows(test)};
}

}  // namespace frane
