#include "frane/parallel.hpp"

#include <omp.h>

namespace frane {

int resolve_threads(Parallelism p) { return p.threads > 0 ? p.threads : omp_get_max_threads(); }

}  // namespace frane
