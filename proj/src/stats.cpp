#include "cvp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cvp/error.hpp"

namespace cvp::stats {

double mean(std::span<const double> x) {
    if (x.empty()) throw DataError("mean of an empty sequence");
    const double n = static_cast<double>(x.size());
    double m = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double correction = 0.0;
    for (double v : x) correction += v - m;
    return m + correction / n;
}

double population_variance(std::span<const double> x) {
    const double m = mean(x);
    double ss = 0.0;
    for (double v : x) ss += (v - m) * (v - m);
    return ss / static_cast<double>(x.size());
}

double population_stddev(std::span<const double> x) {
    return std::sqrt(population_variance(x));
}

double sample_stddev(std::span<const double> x) {
    if (x.size() < 2) throw DataError("sample standard deviation needs at least 2 values");
    const double n = static_cast<double>(x.size());
    return std::sqrt(population_variance(x) * n / (n - 1.0));
}

std::vector<double> average_ranks(std::span<const double> x) {
    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });

    std::vector<double> ranks(x.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i + 1;
        while (j < order.size() && x[order[j]] == x[order[i]]) ++j;
        // positions i..j-1 hold ranks i+1..j
        const double avg = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k) ranks[order[k]] = avg;
        i = j;
    }
    return ranks;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw DataError("correlation inputs differ in length (" + std::to_string(x.size()) +
                        " vs " + std::to_string(y.size()) + ")");
    if (x.size() < 2) throw DataError("correlation needs at least 2 pairs");

    const double mx = mean(x);
    const double my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw DegenerateError("correlation of a constant sequence");
    // sqrt of the product keeps integer-valued rank sums exact
    const double prod = sxx * syy;
    const double denom = std::isfinite(prod) ? std::sqrt(prod) : std::sqrt(sxx) * std::sqrt(syy);
    const double r = sxy / denom;
    return std::clamp(r, -1.0, 1.0);
}

double quantile(std::span<const double> x, double q) {
    if (x.empty()) throw DataError("quantile of an empty sequence");
    std::vector<double> s(x.begin(), x.end());
    std::sort(s.begin(), s.end());
    const double h = (static_cast<double>(s.size()) - 1.0) * std::clamp(q, 0.0, 1.0);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, s.size() - 1);
    return s[lo] + (h - static_cast<double>(lo)) * (s[hi] - s[lo]);
}

bool all_finite(std::span<const double> x) {
    return std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); });
}

}  // namespace cvp::stats
