#include "frane/serialize.hpp"

#include <charconv>
#include <ostream>

#include <json.hpp>

namespace frane {

std::string format_real(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, ptr};
}

void write_ranking_json(std::ostream& out, const FraneResult& result, const FraneConfig& config) {
    const auto& r = result.ranking;
    nlohmann::ordered_json doc;
    doc["similarity"] = to_string(config.similarity);
    doc["progression"] = to_string(config.progression);
    doc["selection"] = to_string(config.selection);
    doc["threshold"] = r.chosen_threshold;
    doc["rqh"] = r.chosen_rqh;
    doc["schedule_index"] = r.chosen_schedule_index;
    doc["candidates"] = result.candidates.size();
    auto& ranking = doc["ranking"] = nlohmann::ordered_json::array();
    for (std::size_t pos = 0; pos < r.order.size(); ++pos) {
        const auto j = r.order[pos];
        ranking.push_back({{"rank", pos + 1}, {"feature", r.feature_names[j]}, {"importance", r.importances[j]}});
    }
    out << doc.dump(2) << '\n';
}

void write_ranking_csv(std::ostream& out, const FeatureRanking& ranking) {
    out << "rank,feature,importance\n";
    for (std::size_t pos = 0; pos < ranking.order.size(); ++pos) {
        const auto j = ranking.order[pos];
        out << pos + 1 << ',' << ranking.feature_names[j] << ',' << format_real(ranking.importances[j]) << '\n';
    }
}

namespace {

void write_eval_rows(std::ostream& out, std::string_view prefix, const EvalReport& report) {
    for (std::size_t fold = 0; fold < report.per_fold_rmae.size(); ++fold) {
        for (std::size_t p = 0; p < report.n_prime_list.size(); ++p) {
            out << prefix << fold << ',' << report.n_prime_list[p] << ',' << format_real(report.per_fold_rmae[fold][p])
                << '\n';
        }
    }
    for (std::size_t p = 0; p < report.n_prime_list.size(); ++p) {
        out << prefix << "mean," << report.n_prime_list[p] << ',' << format_real(report.mean_rmae[p]) << '\n';
    }
}

}  // namespace

void write_eval_csv(std::ostream& out, const EvalReport& report) {
    out << "fold,n_prime,rmae\n";
    write_eval_rows(out, "", report);
}

void write_curve_csv(std::ostream& out, const EvalReport& report) {
    out << "n_prime,mean_rmae\n";
    for (std::size_t p = 0; p < report.n_prime_list.size(); ++p) {
        out << report.n_prime_list[p] << ',' << format_real(report.mean_rmae[p]) << '\n';
    }
}

void write_sweep_block(std::ostream& out, std::string_view similarity, std::string_view progression,
                       const EvalReport& report, bool header) {
    if (header) out << "similarity,progression,fold,n_prime,rmae\n";
    std::string prefix;
    prefix.append(similarity).append(",").append(progression).append(",");
    write_eval_rows(out, prefix, report);
}

}  // namespace frane
