#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace sinai::verify {

struct Estimate {
    double value = 0.0;
    double stderr_ = 0.0;  // sample standard deviation / sqrt(n)
    std::int64_t n = 0;
};

// Kolmogorov-Smirnov sup distance between the empirical CDF of a sorted
// sample and a reference CDF. Throws DomainError on an empty or unsorted
// sample.
double ks_distance(const std::vector<double>& sorted_sample,
                   const std::function<double(double)>& cdf);

// Mean and standard error of z^k over a list of flip counts (|z| <= 1).
Estimate estimate_genfun(const std::vector<std::int64_t>& counts, double z);

// Least-squares slope of log p against log x. Requires at least two
// distinct abscissae, all coordinates positive.
double loglog_slope(const std::vector<std::pair<double, double>>& points);

}  // namespace sinai::verify
