#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "frane/serialize.hpp"
#include "synthetic.hpp"

using namespace frane;

TEST_CASE("ranking json schema") {
    const auto x = synthetic::gaussian(20, 5, 1);
    FraneConfig cfg;
    const auto result = run_frane(x, cfg);
    std::ostringstream out;
    write_ranking_json(out, result, cfg);
    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc["similarity"] == "pearson");
    CHECK(doc["progression"] == "geometric");
    CHECK(doc["threshold"].get<double>() == result.ranking.chosen_threshold);
    CHECK(doc["rqh"].get<double>() == result.ranking.chosen_rqh);
    REQUIRE(doc["ranking"].size() == 5);
    for (std::size_t pos = 0; pos < 5; ++pos) {
        const auto& e = doc["ranking"][pos];
        const auto j = result.ranking.order[pos];
        CHECK(e["rank"] == pos + 1);
        CHECK(e["feature"] == x.feature_names()[j]);
        CHECK(e["importance"].get<double>() == result.ranking.importances[j]);
    }
}

TEST_CASE("ranking csv") {
    FeatureRanking r;
    r.feature_names = {"a", "b", "c"};
    r.importances = {0.25, 0.5, 0.25};
    r.order = importance_order(r.importances);
    std::ostringstream out;
    write_ranking_csv(out, r);
    CHECK(out.str() == "rank,feature,importance\n1,b,0.5\n2,a,0.25\n3,c,0.25\n");
}

TEST_CASE("eval, curve and sweep csv") {
    EvalReport report;
    report.n_prime_list = {1, 4};
    report.per_fold_rmae = {{0.5, 0.25}, {1.5, 0.75}};
    report.mean_rmae = {1.0, 0.5};
    std::ostringstream eval;
    write_eval_csv(eval, report);
    CHECK(eval.str() == "fold,n_prime,rmae\n0,1,0.5\n0,4,0.25\n1,1,1.5\n1,4,0.75\nmean,1,1\nmean,4,0.5\n");
    std::ostringstream curve;
    write_curve_csv(curve, report);
    CHECK(curve.str() == "n_prime,mean_rmae\n1,1\n4,0.5\n");
    std::ostringstream sweep;
    write_sweep_block(sweep, "pearson", "quantile", report, true);
    CHECK(sweep.str().rfind("similarity,progression,fold,n_prime,rmae\npearson,quantile,0,1,0.5\n", 0) == 0);
    CHECK(format_real(0.1) == "0.1");
}
