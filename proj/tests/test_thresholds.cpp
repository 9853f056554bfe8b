#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "frane/error.hpp"
#include "frane/thresholds.hpp"

using namespace frane;

TEST_CASE("geometric schedule") {
    const auto stats = stats_from_values({1, 2, 4});
    SUBCASE("I = 2 gives [2, 1]") {
        CHECK(geometric_schedule(stats, 2).values == std::vector<double>{2.0, 1.0});
    }
    SUBCASE("I = 3 midpoint") {
        const auto s = geometric_schedule(stats, 3);
        REQUIRE(s.values.size() == 3);
        CHECK(s.values[1] == doctest::Approx(4.0 - 2.0 * std::sqrt(1.5)).epsilon(1e-15));
        CHECK(s.values[1] == doctest::Approx(1.5505).epsilon(1e-4));
    }
    SUBCASE("all weights equal") {
        CHECK(geometric_schedule(stats_from_values({5, 5, 5}), 100).values == std::vector<double>{5.0});
    }
    SUBCASE("|D| = 1") {
        const auto s = geometric_schedule(stats_from_values({1, 4, 4}), 5);
        CHECK(s.values == std::vector<double>(5, 1.0));
    }
    CHECK_THROWS_AS(geometric_schedule(stats, 1), Error);
}

TEST_CASE("geometric schedule properties") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> w(3 + rng() % 40);
        for (auto& v : w) v = u(rng);
        if (trial % 3 == 0) w.push_back(*std::max_element(w.begin(), w.end()));  // repeated maximum
        const auto stats = stats_from_values(w);
        const std::size_t iterations = 2 + rng() % 120;
        const auto s = geometric_schedule(stats, iterations);
        std::set<double> d;
        for (double v : w)
            if (v < stats.max) d.insert(stats.max - v);
        REQUIRE(d.size() >= 2);
        CHECK(s.values.front() == stats.max - *d.begin());
        CHECK(s.values.back() == stats.min);
        for (double t : s.values) CHECK((t >= stats.min && t <= stats.max));
        for (std::size_t i = 1; i < s.values.size(); ++i) CHECK(s.values[i] <= s.values[i - 1]);

        // Duplicates in W' do not change the schedule.
        auto doubled = w;
        doubled.insert(doubled.end(), w.begin(), w.end());
        CHECK(geometric_schedule(stats_from_values(doubled), iterations).values == s.values);
    }
}

TEST_CASE("linear schedule") {
    CHECK(linear_schedule(0, 1, 3).values == std::vector<double>{0, 0.5, 1});
    CHECK(linear_schedule(2.5, 2.5, 4).values == std::vector<double>(4, 2.5));
    const auto stats = stats_from_values({1, 2, 4});
    const auto s = make_schedule(Progression::linear_mean, stats, 2);
    CHECK(s.values[0] == doctest::Approx(7.0 / 3.0));
    CHECK(s.values[1] == 4.0);
    CHECK(make_schedule(Progression::linear_median, stats, 2).values == std::vector<double>{2, 4});
    CHECK(make_schedule(Progression::linear_min, stats, 2).values == std::vector<double>{1, 4});
    CHECK_THROWS_AS(linear_schedule(2, 1, 3), Error);
}

TEST_CASE("quantile schedule") {
    CHECK(quantile_schedule({1, 2, 3, 4}, 4).values == std::vector<double>{1, 2, 3, 4});
    CHECK(quantile_schedule({5, 5, 5}, 7).values == std::vector<double>(7, 5));
    // Nearest rank: ceil(i*6/3) = 2, 4, 6.
    CHECK(quantile_schedule({1, 2, 3, 4, 5, 6}, 3).values == std::vector<double>{2, 4, 6});
    CHECK_THROWS_AS(quantile_schedule({}, 3), Error);
}

TEST_CASE("all progressions stay inside [min W', max W']") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-3.0, 10.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> w(1 + rng() % 30);
        for (auto& v : w) v = u(rng);
        const auto stats = stats_from_values(w);
        for (const auto p : kAllProgressions) {
            const auto s = make_schedule(p, stats, 2 + rng() % 50);
            for (double t : s.values) CHECK((t >= stats.min && t <= stats.max));
            if (p != Progression::geometric) CHECK(std::is_sorted(s.values.begin(), s.values.end()));
        }
    }
}

TEST_CASE("sweep_order dedupes and descends") {
    ThresholdSchedule s{{1, 3, 3, 2, 1}, Progression::quantile, 5};
    const auto order = sweep_order(s);
    REQUIRE(order.size() == 3);
    CHECK(order[0].value == 3);
    CHECK(order[0].schedule_index == 1);
    CHECK(order[1].value == 2);
    CHECK(order[2].value == 1);
    CHECK(order[2].schedule_index == 0);
}
