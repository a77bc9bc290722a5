#pragma once

#include <cstdint>

#include "sinai/coarsen.hpp"
#include "sinai/rng.hpp"

namespace sinai::renewal {

using coarsen::SignChangeLog;

// Simulates the sign-change levels directly through their multiplicative
// renewal structure: X_1 from the first-flip law, then X_{k+1} = X_k * r
// with i.i.d. ratios, until the level exceeds x_max.
SignChangeLog simulate_sign_changes(double x_max, std::uint64_t seed);
SignChangeLog simulate_sign_changes(double x_max, rng::Stream& stream);

// Number of recorded levels <= x. Throws DomainError beyond the log's
// completeness level.
std::int64_t count_flips(const SignChangeLog& log, double x);

struct LdpEstimate {
    double rate = 0.0;      // -(1/t) log of the exceedance frequency
    std::int64_t hits = 0;  // exceedances observed
};

// Direct frequency estimate of the decay rate of P(k(e^t) >= a t) over n
// independent renewal runs. Throws InsufficientHits below 20 exceedances.
LdpEstimate ldp_tail_estimate(double a, double t, std::int64_t n,
                              std::uint64_t seed);

}  // namespace sinai::renewal
