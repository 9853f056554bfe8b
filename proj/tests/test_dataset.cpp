#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "frane/dataset.hpp"
#include "frane/error.hpp"
#include "synthetic.hpp"

using namespace frane;

namespace {

DataMatrix parse(const std::string& text, const std::vector<std::string>& ignore = {}) {
    std::istringstream in(text);
    return parse_csv(in, ignore);
}

}  // namespace

TEST_CASE("load_csv drops ignored columns and keeps row order") {
    const auto x = parse("a,b,c,label\n1,2,3,0\n4,5,6,1\n7,8,9,0\n", {"label"});
    CHECK(x.rows() == 3);
    CHECK(x.cols() == 3);
    CHECK(x.feature_names() == std::vector<std::string>{"a", "b", "c"});
    CHECK(x(0, 0) == 1.0);
    CHECK(x(2, 2) == 9.0);
}

TEST_CASE("load_csv rejects bad input") {
    SUBCASE("NaN cell names the position") {
        try {
            parse("a,b,c\n1,2,3\n4,NaN,6\n");
            FAIL("expected an error");
        } catch (const Error& e) {
            const std::string msg = e.what();
            CHECK(msg.find("row 2") != std::string::npos);
            CHECK(msg.find("'b'") != std::string::npos);
        }
    }
    SUBCASE("non-numeric cell") { CHECK_THROWS_AS(parse("a,b,c\n1,x,3\n"), Error); }
    SUBCASE("too few features") {
        CHECK_THROWS_WITH(parse("a,b\n1,2\n"), doctest::Contains("need at least 3 features"));
        CHECK_THROWS_WITH(parse("a,b,c\n1,2,3\n", {"c"}), doctest::Contains("need at least 3 features"));
    }
    SUBCASE("duplicate header") { CHECK_THROWS_AS(parse("a,b,a\n1,2,3\n"), Error); }
    SUBCASE("ragged row") { CHECK_THROWS_AS(parse("a,b,c\n1,2\n"), Error); }
    SUBCASE("missing file") { CHECK_THROWS_AS(load_csv("/nonexistent/data.csv"), Error); }
    SUBCASE("infinity") { CHECK_THROWS_AS(parse("a,b,c\n1,inf,3\n"), Error); }
}

TEST_CASE("csv round trip is bit-exact") {
    const auto x = synthetic::gaussian(17, 5, 3);
    std::ostringstream out;
    write_csv(out, x);
    CHECK(parse(out.str()) == x);

    const auto path = std::filesystem::temp_directory_path() / "frane_roundtrip.csv";
    std::ofstream(path) << out.str();
    CHECK(load_csv(path) == x);
    std::filesystem::remove(path);
}

TEST_CASE("split_folds") {
    SUBCASE("m == folds gives singleton folds") {
        const auto s = split_folds(10, 10, 0);
        auto sorted = s.assignments;
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::size_t> expect(10);
        std::iota(expect.begin(), expect.end(), std::size_t{0});
        CHECK(sorted == expect);
    }
    SUBCASE("m = 11 over 10 folds") {
        const auto s = split_folds(11, 10, 5);
        std::vector<std::size_t> sizes(10, 0);
        for (auto f : s.assignments) ++sizes[f];
        CHECK(std::count(sizes.begin(), sizes.end(), 1) == 9);
        CHECK(std::count(sizes.begin(), sizes.end(), 2) == 1);
    }
    SUBCASE("deterministic for fixed seed") {
        CHECK(split_folds(100, 10, 7).assignments == split_folds(100, 10, 7).assignments);
        CHECK(split_folds(100, 10, 7).assignments != split_folds(100, 10, 8).assignments);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(split_folds(3, 4, 0), Error);
        CHECK_THROWS_AS(split_folds(10, 1, 0), Error);
    }
}

TEST_CASE("fold partition property") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t m = 10 + seed * 3;
        const std::size_t folds = 2 + seed % 9;
        const auto s = split_folds(m, folds, seed);
        std::vector<std::size_t> sizes(folds, 0);
        for (auto f : s.assignments) ++sizes[f];
        CHECK(*std::max_element(sizes.begin(), sizes.end()) - *std::min_element(sizes.begin(), sizes.end()) <= 1);

        std::vector<std::size_t> all_test;
        for (std::size_t f = 0; f < folds; ++f) {
            const auto test = s.test_rows(f);
            const auto train = s.train_rows(f);
            CHECK(test.size() + train.size() == m);
            std::vector<std::size_t> both;
            std::set_intersection(test.begin(), test.end(), train.begin(), train.end(), std::back_inserter(both));
            CHECK(both.empty());
            all_test.insert(all_test.end(), test.begin(), test.end());
        }
        std::sort(all_test.begin(), all_test.end());
        std::vector<std::size_t> expect(m);
        std::iota(expect.begin(), expect.end(), std::size_t{0});
        CHECK(all_test == expect);
    }
}

TEST_CASE("take_fold preserves relative order") {
    const auto x = synthetic::gaussian(10, 3, 1);
    const auto split = split_folds(10, 10, 0);
    const auto [train, test] = take_fold(x, split, 3);
    CHECK(train.rows() == 9);
    CHECK(test.rows() == 1);

    const auto rows = split.train_rows(3);
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(train(i, 0) == x(rows[i], 0));
    CHECK_THROWS_AS(take_fold(x, split, 10), Error);

    // Test folds concatenated and re-sorted by original index reproduce X.
    std::vector<std::pair<std::size_t, double>> seen;
    for (std::size_t f = 0; f < 10; ++f) {
        const auto t = take_fold(x, split, f).test;
        const auto idx = split.test_rows(f);
        for (std::size_t i = 0; i < idx.size(); ++i) seen.emplace_back(idx[i], t(i, 1));
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < 10; ++i) CHECK(seen[i].second == x(i, 1));
}

TEST_CASE("DataMatrix invariants") {
    CHECK_THROWS_AS(DataMatrix(1, 2, {1.0, 2.0}, {"a", "a"}), Error);
    CHECK_THROWS_AS(DataMatrix(1, 2, {1.0}, {"a", "b"}), Error);
    CHECK_THROWS_AS(DataMatrix(1, 2, {1.0, std::nan("")}, {"a", "b"}), Error);
}
