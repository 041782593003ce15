#include <random>

#include "cvp/error.hpp"
#include "cvp/stats.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cvp;

TEST_CASE("average ranks agree with pairwise counting and permutation enumeration") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> small(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 7;
        std::vector<double> x(n);
        for (auto& v : x) v = small(rng);
        const auto r = stats::average_ranks(x);
        CHECK(r == oracle::count_ranks(x));
        CHECK(r == oracle::permutation_ranks(x));
    }
}

TEST_CASE("average ranks of the tied example") {
    CHECK(stats::average_ranks(std::vector<double>{1, 2, 2, 4}) == std::vector<double>{1, 2.5, 2.5, 4});
}

TEST_CASE("mean and population stddev") {
    const std::vector<double> x = {1, 2, 3, 4, 5};
    CHECK(stats::mean(x) == 3.0);
    CHECK(stats::population_stddev(x) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(stats::sample_stddev(x) == doctest::Approx(std::sqrt(2.5)).epsilon(1e-15));
    CHECK_THROWS_AS(stats::mean(std::vector<double>{}), DataError);
}

TEST_CASE("pearson errors") {
    CHECK_THROWS_AS(stats::pearson(std::vector<double>{1, 2}, std::vector<double>{1}), DataError);
    CHECK_THROWS_AS(stats::pearson(std::vector<double>{1}, std::vector<double>{1}), DataError);
    CHECK_THROWS_AS(stats::pearson(std::vector<double>{1, 1, 1}, std::vector<double>{1, 2, 3}), DegenerateError);
}

TEST_CASE("type-7 quantiles") {
    const std::vector<double> x = {4, 1, 3, 2};
    CHECK(stats::quantile(x, 0.0) == 1.0);
    CHECK(stats::quantile(x, 1.0) == 4.0);
    CHECK(stats::quantile(x, 0.5) == 2.5);
    CHECK(stats::quantile(x, 0.25) == doctest::Approx(1.75));
}
