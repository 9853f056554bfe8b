#pragma once

namespace frane {

/// Thread count for OpenMP kernels. 0 means the OpenMP default, 1 selects the
/// serial reference path.
struct Parallelism {
    int threads = 0;

    [[nodiscard]] bool serial() const { return threads == 1; }
};

/// Resolve a Parallelism to a concrete thread count for `omp parallel num_threads`.
int resolve_threads(Parallelism p);

}  // namespace frane
