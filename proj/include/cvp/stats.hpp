#pragma once

#include <span>
#include <vector>

// Shared numerics. All routines work in double precision and use two-pass
// (centered) formulas.
namespace cvp::stats {

// Throws DataError on empty input.
double mean(std::span<const double> x);

// Divides by n.
double population_variance(std::span<const double> x);
double population_stddev(std::span<const double> x);

// Divides by n - 1. Requires n >= 2.
double sample_stddev(std::span<const double> x);

// 1-based fractional ranks; tied values receive the mean of the ranks they span.
std::vector<double> average_ranks(std::span<const double> x);

// Pearson product-moment correlation, clamped to [-1, 1].
// Throws DataError on length mismatch or n < 2, DegenerateError if either
// input is constant.
double pearson(std::span<const double> x, std::span<const double> y);

// Linear-interpolation quantile (Hyndman-Fan type 7), q in [0, 1].
double quantile(std::span<const double> x, double q);

bool all_finite(std::span<const double> x);

}  // namespace cvp::stats
