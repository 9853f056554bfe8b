#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "frane/dataset.hpp"

namespace synthetic {

inline std::vector<std::string> names(std::size_t n, const std::string& prefix = "f") {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < n; ++j) out.push_back(prefix + std::to_string(j));
    return out;
}

inline frane::DataMatrix gaussian(std::size_t m, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> z;
    std::vector<double> v(m * n);
    for (auto& x : v) x = z(rng);
    return {m, n, std::move(v), names(n)};
}

/// Two redundancy groups plus pure-noise columns, 12 features in total.
/// Each group has a low-noise representative (its first column) and
/// group_size - 1 noisier copies of the same latent signal; the remaining
/// 12 - 2 * group_size columns are independent noise.
struct GroupedData {
    frane::DataMatrix data;
    std::vector<std::size_t> representatives;
    std::vector<std::size_t> noise;
};

inline GroupedData redundancy_groups(std::uint64_t seed, std::size_t group_size = 5, std::size_t m = 100) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> z;
    const std::size_t n = 12;
    std::vector<double> v(m * n);
    for (std::size_t i = 0; i < m; ++i) {
        double* row = v.data() + i * n;
        for (std::size_t g = 0; g < 2; ++g) {
            const double latent = z(rng);
            const std::size_t first = g * group_size;
            row[first] = latent + 0.2 * z(rng);
            for (std::size_t j = first + 1; j < first + group_size; ++j) row[j] = latent + 0.8 * z(rng);
        }
        for (std::size_t j = 2 * group_size; j < n; ++j) row[j] = z(rng);
    }
    GroupedData out{frane::DataMatrix{m, n, std::move(v), names(n)}, {0, group_size}, {}};
    for (std::size_t j = 2 * group_size; j < n; ++j) out.noise.push_back(j);
    return out;
}

}  // namespace synthetic
