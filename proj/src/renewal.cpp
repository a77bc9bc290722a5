#include "sinai/renewal.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "sinai/errors.hpp"
#include "sinai/laws.hpp"
#include "sinai/parallel.hpp"

namespace sinai::renewal {

SignChangeLog simulate_sign_changes(double x_max, rng::Stream& stream) {
    if (!(x_max >= 1.0)) throw DomainError("x_max must be >= 1");
    SignChangeLog log;
    log.initial_sign = stream.coin() ? +1 : -1;
    log.x_max = x_max;
    double x = laws::sample_first_flip(stream);
    while (x <= x_max) {
        log.levels.push_back(x);
        x *= laws::sample_ratio(stream);
    }
    return log;
}

SignChangeLog simulate_sign_changes(double x_max, std::uint64_t seed) {
    rng::Stream stream(seed, rng::purpose::renewal, 0);
    return simulate_sign_changes(x_max, stream);
}

std::int64_t count_flips(const SignChangeLog& log, double x) {
    if (x > log.x_max) throw DomainError("log incomplete beyond its x_max");
    const auto it =
        std::upper_bound(log.levels.begin(), log.levels.end(), x);
    return static_cast<std::int64_t>(it - log.levels.begin());
}

LdpEstimate ldp_tail_estimate(double a, double t, std::int64_t n,
                              std::uint64_t seed) {
    if (!(a > 1.0 / 3.0)) throw DomainError("rate estimation needs a > 1/3");
    if (!(t > 0.0)) throw DomainError("t must be positive");
    if (n < 1) throw DomainError("need at least one run");
    const double x_max = std::exp(t);
    const double threshold = a * t;
    std::atomic<std::int64_t> hits{0};
    parallel::parallel_for(n, [&](std::int64_t i) {
        rng::Stream stream(seed, rng::purpose::ldp, static_cast<std::uint64_t>(i));
        // Count flips only; levels themselves are not needed.
        double x = laws::sample_first_flip(stream);
        std::int64_t k = 0;
        while (x <= x_max) {
            ++k;
            x *= laws::sample_ratio(stream);
        }
        if (static_cast<double>(k) >= threshold) {
            hits.fetch_add(1, std::memory_order_relaxed);
        }
    });
    const std::int64_t h = hits.load();
    if (h < 20) {
        throw InsufficientHits("only " + std::to_string(h) +
                               " exceedances; increase n");
    }
    LdpEstimate est;
    est.hits = h;
    est.rate = -std::log(static_cast<double>(h) / static_cast<double>(n)) / t;
    return est;
}

}  // namespace sinai::renewal
