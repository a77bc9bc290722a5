#include "sinai/verify.hpp"

#include <algorithm>
#include <cmath>

#include "sinai/errors.hpp"

namespace sinai::verify {

double ks_distance(const std::vector<double>& sorted_sample,
                   const std::function<double(double)>& cdf) {
    const std::size_t n = sorted_sample.size();
    if (n == 0) throw DomainError("empty sample");
    if (!std::is_sorted(sorted_sample.begin(), sorted_sample.end())) {
        throw DomainError("sample must be sorted");
    }
    double d = 0.0;
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf(sorted_sample[i]);
        const double hi = static_cast<double>(i + 1) * inv_n - f;
        const double lo = f - static_cast<double>(i) * inv_n;
        d = std::max(d, std::max(hi, lo));
    }
    return d;
}

Estimate estimate_genfun(const std::vector<std::int64_t>& counts, double z) {
    if (counts.empty()) throw DomainError("empty count list");
    if (!(std::abs(z) <= 1.0)) throw DomainError("need |z| <= 1");
    const std::int64_t n = static_cast<std::int64_t>(counts.size());
    double sum = 0.0, sumsq = 0.0;
    for (std::int64_t k : counts) {
        const double v = std::pow(z, static_cast<double>(k));
        sum += v;
        sumsq += v * v;
    }
    Estimate e;
    e.n = n;
    e.value = sum / static_cast<double>(n);
    const double var =
        n > 1 ? std::max(0.0, (sumsq - sum * sum / static_cast<double>(n)) /
                                  static_cast<double>(n - 1))
              : 0.0;
    e.stderr_ = std::sqrt(var / static_cast<double>(n));
    return e;
}

double loglog_slope(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2) throw DomainError("need at least two points");
    double sx = 0.0, sy = 0.0;
    for (const auto& [x, p] : points) {
        if (!(x > 0.0) || !(p > 0.0)) throw DomainError("coordinates must be positive");
        sx += std::log(x);
        sy += std::log(p);
    }
    const double n = static_cast<double>(points.size());
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, p] : points) {
        const double dx = std::log(x) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(p) - my);
    }
    if (sxx == 0.0) throw DomainError("degenerate abscissae");
    return sxy / sxx;
}

}  // namespace sinai::verify
