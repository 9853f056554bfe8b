// frane: unsupervised feature ranking via attribute networks.
//
//   frane rank     -i data.csv [--similarity pearson] [--progression geometric] ...
//   frane evaluate -i data.csv [--folds 10] [-k 5] [--n-prime 16 ...]
//   frane curve    -i data.csv            (n' = 1, 2, 4, ..., n)
//   frane sweep    -i data.csv [--similarities ...] [--progressions ...]
//
// Exit codes: 0 success, 1 pipeline error, 2 invalid flags.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frane/dataset.hpp"
#include "frane/error.hpp"
#include "frane/evalharness.hpp"
#include "frane/frane.hpp"
#include "frane/serialize.hpp"

namespace {

struct CommonOptions {
    std::string input;
    std::vector<std::string> ignore_columns;
    std::string similarity = "pearson";
    std::string progression = "geometric";
    std::size_t iterations = 100;
    double min_avg_degree = 1.0;
    double damping = 0.85;
    std::string selection = "rqh";
    std::uint64_t seed = 0;
    int threads = 0;
    std::string output;
};

struct EvalOptions {
    std::size_t folds = 10;
    std::size_t k = 5;
    std::vector<std::size_t> n_prime{16};
};

std::vector<std::string> names_of(auto const& all) {
    std::vector<std::string> out;
    for (const auto v : all) out.emplace_back(frane::to_string(v));
    return out;
}

const CLI::Validator kOpenUnit(
    [](std::string& s) -> std::string {
        double v = 0.0;
        if (!CLI::detail::lexical_cast(s, v) || !(v > 0.0 && v < 1.0)) return "value must lie strictly between 0 and 1";
        return {};
    },
    "(0,1)");

void add_common(CLI::App* cmd, CommonOptions& o, bool with_measure) {
    cmd->add_option("-i,--input", o.input, "CSV file with a header row")->required()->check(CLI::ExistingFile);
    cmd->add_option("--ignore-columns", o.ignore_columns, "Columns to drop (e.g. class labels)")->delimiter(',');
    if (with_measure) {
        cmd->add_option("--similarity", o.similarity, "Feature similarity measure")
            ->check(CLI::IsMember(names_of(frane::kAllSimilarities)))
            ->capture_default_str();
        cmd->add_option("--progression", o.progression, "Threshold progression")
            ->check(CLI::IsMember(names_of(frane::kAllProgressions)))
            ->capture_default_str();
    }
    cmd->add_option("--iterations", o.iterations, "Number of thresholds I")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}))
        ->capture_default_str();
    cmd->add_option("--min-avg-degree", o.min_avg_degree, "Minimum average degree of a candidate graph")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--damping", o.damping, "PageRank damping factor")->check(kOpenUnit)->capture_default_str();
    cmd->add_option("--selection", o.selection, "Candidate selection policy")
        ->check(CLI::IsMember({"rqh", "random"}))
        ->capture_default_str();
    cmd->add_option("--seed", o.seed, "Seed for fold splits and random selection")->capture_default_str();
    cmd->add_option("--threads", o.threads, "Worker threads (0 = all available)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("-o,--output", o.output, "Output file (default: standard output)");
}

void add_eval(CLI::App* cmd, EvalOptions& e, bool with_n_prime) {
    cmd->add_option("--folds", e.folds, "Cross-validation folds")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}))
        ->capture_default_str();
    cmd->add_option("-k,--neighbors", e.k, "Neighbors in the kNN reconstruction")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    if (with_n_prime) {
        cmd->add_option("--n-prime", e.n_prime, "Numbers of top-ranked features to evaluate")
            ->check(CLI::PositiveNumber)
            ->delimiter(',')
            ->capture_default_str();
    }
}

frane::FraneConfig make_config(const CommonOptions& o) {
    frane::FraneConfig cfg;
    cfg.similarity = *frane::parse_similarity(o.similarity);
    cfg.progression = *frane::parse_progression(o.progression);
    cfg.iterations = o.iterations;
    cfg.min_avg_degree = o.min_avg_degree;
    cfg.damping = o.damping;
    cfg.selection = *frane::parse_selection(o.selection);
    cfg.seed = o.seed;
    cfg.parallelism.threads = o.threads;
    return cfg;
}

frane::EvalConfig make_eval_config(const CommonOptions& o, const EvalOptions& e) {
    frane::EvalConfig cfg;
    cfg.folds = e.folds;
    cfg.k_neighbors = e.k;
    cfg.n_prime_list = e.n_prime;
    cfg.seed = o.seed;
    cfg.parallelism.threads = o.threads;
    return cfg;
}

frane::Ranker make_ranker(const frane::FraneConfig& cfg) {
    return [cfg](const frane::DataMatrix& train) { return frane::run_frane(train, cfg).ranking; };
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw frane::Error("cannot write '" + path + "'");
    out << text;
}

void note_exclusions(const frane::EvalReport& report) {
    if (report.zero_variance_exclusions > 0)
        std::cerr << "note: " << report.zero_variance_exclusions
                  << " constant training-fold feature(s) left out of RMAE\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unsupervised feature ranking via attribute networks and weighted PageRank"};
    app.require_subcommand(1);

    CommonOptions common;
    EvalOptions eval;

    auto* rank = app.add_subcommand("rank", "Rank the features of a data set");
    add_common(rank, common, true);
    std::string format = "json";
    std::string dump_graph;
    std::string save_similarity;
    std::string load_similarity;
    rank->add_option("--format", format, "Ranking output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    rank->add_option("--dump-graph", dump_graph, "Write the chosen graph as 'j k w' lines");
    rank->add_option("--save-similarity", save_similarity, "Cache the similarity matrix to a file");
    rank->add_option("--load-similarity", load_similarity, "Reuse a cached similarity matrix")
        ->check(CLI::ExistingFile);

    auto* evaluate = app.add_subcommand("evaluate", "Cross-validated kNN reconstruction error of the ranking");
    add_common(evaluate, common, true);
    add_eval(evaluate, eval, true);

    auto* curve = app.add_subcommand("curve", "Error curve over n' = 1, 2, 4, ..., n");
    add_common(curve, common, true);
    add_eval(curve, eval, false);

    auto* sweep = app.add_subcommand("sweep", "Evaluate every similarity x progression combination");
    add_common(sweep, common, false);
    add_eval(sweep, eval, true);
    std::vector<std::string> similarities = names_of(frane::kAllSimilarities);
    std::vector<std::string> progressions = names_of(frane::kAllProgressions);
    sweep->add_option("--similarities", similarities, "Similarity measures to try")
        ->check(CLI::IsMember(names_of(frane::kAllSimilarities)))
        ->delimiter(',');
    sweep->add_option("--progressions", progressions, "Threshold progressions to try")
        ->check(CLI::IsMember(names_of(frane::kAllProgressions)))
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const auto cfg = make_config(common);
        const auto data = frane::load_csv(common.input, common.ignore_columns);
        std::ostringstream out;

        if (rank->parsed()) {
            const auto w = [&] {
                if (load_similarity.empty()) return frane::compute_similarity(data, cfg.similarity, cfg.parallelism);
                std::ifstream in(load_similarity);
                auto loaded = frane::read_similarity(in);
                if (loaded.size() != data.cols()) throw frane::Error("cached similarity matrix does not match the data");
                return loaded;
            }();
            if (!save_similarity.empty()) {
                std::ostringstream cache;
                frane::write_similarity(cache, w);
                emit(save_similarity, cache.str());
            }
            auto run_cfg = cfg;
            run_cfg.similarity = w.measure();
            const auto result = frane::run_frane(w, data.feature_names(), run_cfg);
            if (format == "json") {
                frane::write_ranking_json(out, result, run_cfg);
            } else {
                frane::write_ranking_csv(out, result.ranking);
            }
            if (!dump_graph.empty()) {
                std::ostringstream graph;
                frane::write_edge_list(graph, frane::graph_edges_at(w, result.ranking.chosen_threshold));
                emit(dump_graph, graph.str());
            }
        } else if (evaluate->parsed()) {
            const auto report = frane::evaluate_ranking(data, make_ranker(cfg), make_eval_config(common, eval));
            note_exclusions(report);
            frane::write_eval_csv(out, report);
        } else if (curve->parsed()) {
            auto eval_cfg = make_eval_config(common, eval);
            eval_cfg.n_prime_list = frane::error_curve_points(data.cols());
            const auto report = frane::evaluate_ranking(data, make_ranker(cfg), eval_cfg);
            note_exclusions(report);
            frane::write_curve_csv(out, report);
        } else if (sweep->parsed()) {
            const auto eval_cfg = make_eval_config(common, eval);
            bool header = true;
            for (const auto& s : similarities) {
                for (const auto& p : progressions) {
                    auto pair_cfg = cfg;
                    pair_cfg.similarity = *frane::parse_similarity(s);
                    pair_cfg.progression = *frane::parse_progression(p);
                    const auto report = frane::evaluate_ranking(data, make_ranker(pair_cfg), eval_cfg);
                    note_exclusions(report);
                    frane::write_sweep_block(out, s, p, report, header);
                    header = false;
                }
            }
        }
        emit(common.output, out.str());
    } catch (const frane::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
