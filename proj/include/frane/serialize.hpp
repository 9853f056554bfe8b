#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "frane/evalharness.hpp"
#include "frane/frane.hpp"

namespace frane {

/// Shortest decimal text that parses back to the same double.
std::string format_real(double v);

/// {"similarity", "progression", "threshold", "rqh", "schedule_index",
///  "candidates", "ranking": [{"rank", "feature", "importance"}, ...]}
void write_ranking_json(std::ostream& out, const FraneResult& result, const FraneConfig& config);
/// Columns rank,feature,importance; rank is 1-based.
void write_ranking_csv(std::ostream& out, const FeatureRanking& ranking);

/// Columns fold,n_prime,rmae: one row per fold and n', then one row per n'
/// with fold = "mean".
void write_eval_csv(std::ostream& out, const EvalReport& report);
/// Columns n_prime,mean_rmae, ascending n'.
void write_curve_csv(std::ostream& out, const EvalReport& report);
/// Block of rows prefixed with similarity,progression; header written when `header` is set.
void write_sweep_block(std::ostream& out, std::string_view similarity, std::string_view progression,
                       const EvalReport& report, bool header);

}  // namespace frane
