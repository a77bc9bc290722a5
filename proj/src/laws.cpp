#include "sinai/laws.hpp"

#include <cmath>
#include <limits>

#include "sinai/errors.hpp"

namespace sinai::laws {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

void check_off_cut(cplx z) {
    if (z.imag() == 0.0 && z.real() <= -1.25) {
        throw DomainError("argument lies on the cut (-inf, -5/4]");
    }
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw NonFiniteInput("non-finite argument");
    }
}

// Real-argument exponents at z = 0, used by the ratio and first-flip laws.
struct ZeroExponents {
    double l1, l2, c1, c2;
};

const ZeroExponents& zero_exponents() {
    static const ZeroExponents e = [] {
        const double s = std::sqrt(5.0);
        ZeroExponents r;
        r.l1 = (-3.0 + s) / 2.0;
        r.l2 = (-3.0 - s) / 2.0;
        r.c1 = (-1.0 / 3.0 - r.l2) / (r.l1 - r.l2);
        r.c2 = (1.0 / 3.0 + r.l1) / (r.l1 - r.l2);
        return r;
    }();
    return e;
}

}  // namespace

AnalyticEval exponents(cplx z) {
    check_off_cut(z);
    const cplx s = std::sqrt(5.0 + 4.0 * z);
    AnalyticEval e;
    e.z = z;
    e.lambda1 = (-3.0 + s) / 2.0;
    e.lambda2 = (-3.0 - s) / 2.0;
    const cplx d = e.lambda1 - e.lambda2;  // = s, nonzero off the cut
    e.c1 = ((z - 1.0) / 3.0 - e.lambda2) / d;
    e.c2 = (-(z - 1.0) / 3.0 + e.lambda1) / d;
    return e;
}

cplx genfun(double x, cplx z) {
    if (!(x >= 1.0)) throw DomainError("genfun requires x >= 1");
    const AnalyticEval e = exponents(z);
    return e.c1 * std::pow(cplx(x), e.lambda1) +
           e.c2 * std::pow(cplx(x), e.lambda2);
}

cplx b_coeff(double x, cplx z) {
    if (!(x >= 1.0)) throw DomainError("b_coeff requires x >= 1");
    if (z == cplx(1.0)) throw DomainError("b_coeff undefined at z = 1");
    const AnalyticEval e = exponents(z);
    const cplx one_minus_z = 1.0 - z;
    return e.c1 * (1.0 + e.lambda1 / one_minus_z) * std::pow(cplx(x), e.lambda1) +
           e.c2 * (1.0 + e.lambda2 / one_minus_z) * std::pow(cplx(x), e.lambda2);
}

double genfun_real(double x, double z) { return genfun(x, cplx(z)).real(); }

double b_coeff_real(double x, double z) { return b_coeff(x, cplx(z)).real(); }

double ratio_density(double r) {
    if (!(r >= 1.0)) throw DomainError("ratio support is r >= 1");
    const auto& e = zero_exponents();
    return (std::pow(r, e.l1 - 1.0) - std::pow(r, e.l2 - 1.0)) / (e.l1 - e.l2);
}

double ratio_cdf(double r) {
    if (!(r >= 1.0)) throw DomainError("ratio support is r >= 1");
    const auto& e = zero_exponents();
    return ((std::pow(r, e.l1) - 1.0) / e.l1 - (std::pow(r, e.l2) - 1.0) / e.l2) /
           (e.l1 - e.l2);
}

double sample_ratio(rng::Stream& stream) {
    const auto& e = zero_exponents();
    const double log_r =
        stream.exponential(-1.0 / e.l1) + stream.exponential(-1.0 / e.l2);
    return std::exp(log_r);
}

double transition_density(double y, double x) {
    if (!(x > 0.0)) throw DomainError("transition_density requires x > 0");
    if (y < x) return 0.0;
    const auto& e = zero_exponents();
    const double q = y / x;
    return (std::pow(q, e.l1) - std::pow(q, e.l2)) / ((e.l1 - e.l2) * y);
}

double central_excess_density(double y) {
    if (!(y >= 0.0)) throw DomainError("excess height is nonnegative");
    return (2.0 * y + 1.0) * std::exp(-y) / 3.0;
}

double sample_central_excess(rng::Stream& stream) {
    const double u = stream.uniform01();
    if (3.0 * u < 1.0) return stream.exponential(1.0);
    return stream.exponential(1.0) + stream.exponential(1.0);
}

double slope_length_density(double t, double tol) {
    if (!(t > 0.0)) throw DomainError("slope length support is t > 0");
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    // pi * sum_{k>=0} (-1)^k (k+1/2) exp(-pi^2 (k+1/2)^2 t / 2).
    // Terms increase until k+1/2 ~ 1/(pi sqrt(t)), then decrease; once
    // decreasing, the alternating tail is bounded by the first omitted term.
    const double c = kPi * kPi * t / 2.0;
    double sum = 0.0;
    double sign = 1.0;
    const int budget = 10000;
    for (int k = 0; k < budget; ++k) {
        const double m = k + 0.5;
        const double term = m * std::exp(-c * m * m);
        sum += sign * term;
        sign = -sign;
        const double m_next = m + 1.0;
        const double next = m_next * std::exp(-c * m_next * m_next);
        if (next < term && next * kPi < tol) return kPi * sum;
    }
    throw TruncationNotConverged("series term budget exhausted");
}

double length_laplace(double lambda) {
    if (!(lambda >= 0.0)) throw DomainError("length_laplace requires lambda >= 0");
    return 1.0 / std::cosh(std::sqrt(2.0 * lambda));
}

std::pair<double, double> phi_psi(double s) {
    if (!(s > 0.0)) throw DomainError("phi_psi requires s > 0");
    if (s < 1e-6) {
        // 4-term Taylor series; avoids cancellation in coth/sinh near 0.
        const double phi =
            2.0 * s / 3.0 - 4.0 * s * s / 45.0 + 16.0 * s * s * s / 945.0;
        const double psi =
            1.0 - s / 3.0 + 7.0 * s * s / 90.0 - 31.0 * s * s * s / 1890.0;
        return {phi, psi};
    }
    const double u = std::sqrt(2.0 * s);
    const double sh = std::sinh(u);
    return {u * std::cosh(u) / sh - 1.0, u / sh};
}

double rate_function(double a) {
    if (a < 0.0) return std::numeric_limits<double>::infinity();
    if (a == 0.0) return 1.5 - std::sqrt(1.25);
    const double root = std::sqrt(a * a + 1.25);
    return a * std::log(2.0 * a * (a + root)) + 1.5 - (a + root);
}

double first_flip_cdf(double x) {
    if (!(x >= 1.0)) throw DomainError("first flip level is >= 1");
    return 1.0 - genfun_real(x, 0.0);
}

namespace {

double survival0(double x) {
    const auto& e = zero_exponents();
    return e.c1 * std::pow(x, e.l1) + e.c2 * std::pow(x, e.l2);
}

double survival0_deriv(double x) {
    const auto& e = zero_exponents();
    return e.c1 * e.l1 * std::pow(x, e.l1 - 1.0) +
           e.c2 * e.l2 * std::pow(x, e.l2 - 1.0);
}

}  // namespace

double first_flip_quantile(double u) {
    if (!(u >= 0.0 && u < 1.0)) throw DomainError("quantile needs u in [0, 1)");
    if (u == 0.0) return 1.0;
    const double target = 1.0 - u;  // solve survival0(x) = target, x >= 1
    double lo = 1.0, hi = 2.0;
    while (survival0(hi) > target) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) throw NonFiniteInput("quantile bracket overflow");
    }
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (survival0(mid) > target) lo = mid; else hi = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 4; ++i) {
        const double f = survival0(x) - target;
        const double d = survival0_deriv(x);
        if (d == 0.0) break;
        const double step = f / d;
        double next = x - step;
        if (next < lo || next > hi) break;
        x = next;
        if (std::abs(step) < 1e-13 * std::max(1.0, x)) break;
    }
    return x;
}

double sample_first_flip(rng::Stream& stream) {
    return first_flip_quantile(stream.uniform01());
}

namespace {

cplx profile(double x, double y, cplx z) {
    // The closed-form excess profile; y may go slightly negative inside
    // finite-difference stencils, where the formula extends analytically.
    return (genfun(x, z) + b_coeff(x, z) * y) * std::exp(-y);
}

}  // namespace

cplx pde_residual(double x, double y, cplx z, double fd_step) {
    if (!(x > 1.0)) throw DomainError("pde_residual requires x > 1");
    if (!(y > 0.0)) throw DomainError("pde_residual requires y > 0");
    if (!(fd_step > 0.0)) throw DomainError("fd_step must be positive");
    const double h = fd_step;
    const cplx dx = (profile(x + h, y, z) - profile(x - h, y, z)) / (2.0 * h);
    const cplx dy = (profile(x, y + h, z) - profile(x, y - h, z)) / (2.0 * h);
    const cplx m = profile(x, y, z);
    const cplx lhs = x * dx - (1.0 + y) * dy + 2.0 * m;

    const cplx a = genfun(x, z);
    const cplx b = b_coeff(x, z);
    // (M(x,.,z) * e^{-.})(y) = e^{-y} (a y + b y^2 / 2), exactly.
    const cplx conv = std::exp(-y) * (a * y + b * y * y / 2.0);
    const cplx dy_at0 = (profile(x, h, z) - profile(x, -h, z)) / (2.0 * h);
    const cplx rhs = 2.0 * conv + 2.0 * std::exp(-y) * a -
                     (y + 1.0) * std::exp(-y) * z * dy_at0;
    return lhs - rhs;
}

std::pair<cplx, cplx> ode_residual(double x, cplx z) {
    if (!(x > 1.0)) throw DomainError("ode_residual requires x > 1");
    if (z == cplx(1.0)) throw DomainError("ode_residual undefined at z = 1");
    const AnalyticEval e = exponents(z);
    const cplx one_minus_z = 1.0 - z;
    const cplx p1 = std::pow(cplx(x), e.lambda1);
    const cplx p2 = std::pow(cplx(x), e.lambda2);
    const cplx a = e.c1 * p1 + e.c2 * p2;
    const cplx b = e.c1 * (1.0 + e.lambda1 / one_minus_z) * p1 +
                   e.c2 * (1.0 + e.lambda2 / one_minus_z) * p2;
    // x d/dx of c x^l is c l x^l.
    const cplx xa = e.c1 * e.lambda1 * p1 + e.c2 * e.lambda2 * p2;
    const cplx xb = e.c1 * (1.0 + e.lambda1 / one_minus_z) * e.lambda1 * p1 +
                    e.c2 * (1.0 + e.lambda2 / one_minus_z) * e.lambda2 * p2;
    const cplx ra = xa + (z - 1.0) * (b - a);
    const cplx rb = xb + (2.0 + z) * b - (z + 1.0) * a;
    return {ra, rb};
}

}  // namespace sinai::laws
