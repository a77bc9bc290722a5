#pragma once

#include <complex>
#include <cstdint>
#include <utility>

#include "sinai/rng.hpp"

namespace sinai::laws {

using cplx = std::complex<double>;

// Exponents and coefficients of the sign-survival generating function at a
// given argument z. Valid off the real cut (-inf, -5/4].
struct AnalyticEval {
    cplx z;
    cplx lambda1;  // (-3 + sqrt(5+4z)) / 2, principal branch
    cplx lambda2;  // (-3 - sqrt(5+4z)) / 2
    cplx c1;
    cplx c2;
};

// Computes both exponents and both coefficients. Throws DomainError on the
// cut. Identities (tested): c1 + c2 = 1, lambda1 + lambda2 = -3,
// lambda1 * lambda2 = 1 - z.
AnalyticEval exponents(cplx z);

// a(x, z) = E z^{k(x)}: probability generating function of the number of
// sign changes up to level x >= 1.
cplx genfun(double x, cplx z);

// Coefficient b(x, z) of the linear term in the excess-height profile
// [a + b*y] e^{-y}. Requires z != 1.
cplx b_coeff(double x, cplx z);

// Real-argument conveniences.
double genfun_real(double x, double z);
double b_coeff_real(double x, double z);

// Law of the ratio r = X_{k+1}/X_k of consecutive sign-change levels
// (argument z = 0 exponents). Support r >= 1.
double ratio_density(double r);
double ratio_cdf(double r);
// Exact sampler: log r is the sum of two independent exponentials with
// rates -lambda1 and -lambda2.
double sample_ratio(rng::Stream& stream);

// Density of the height of the slope merged into at a change of sign:
// h(y) = ((y/x)^l1 - (y/x)^l2) / ((l1 - l2) y) for y >= x, 0 below.
double transition_density(double y, double x);

// Density (2y+1)e^{-y}/3 of the central slope's excess height, and its
// exact mixture sampler (1/3 Exp(1) + 2/3 Gamma(2,1)).
double central_excess_density(double y);
double sample_central_excess(rng::Stream& stream);

// Density of the length of a level-1 slope, as an alternating theta-type
// series with certified truncation error < tol, and its Laplace transform
// 1/cosh(sqrt(2 lambda)).
double slope_length_density(double t, double tol = 1e-12);
double length_laplace(double lambda);

// phi(s) = sqrt(2s) coth sqrt(2s) - 1 and psi(s) = sqrt(2s)/sinh sqrt(2s),
// with series evaluation near 0 to avoid cancellation.
std::pair<double, double> phi_psi(double s);

// Large-deviation rate function of k(e^t)/t; +infinity for a < 0.
double rate_function(double a);

// Law of the first sign-change level X_1: CDF 1 - a(x, 0) for x >= 1.
double first_flip_cdf(double x);
// Inverse CDF to accuracy 1e-12, relative for large quantiles (bracketed
// bisection plus Newton polish).
double first_flip_quantile(double u);
double sample_first_flip(rng::Stream& stream);

// Residual of the closed-form profile M(x,y,z) = [a + b y] e^{-y} in the
// level-evolution PDE, with d/dx and d/dy by central differences of step
// fd_step and the convolution against e^{-.} in closed form. Vanishes to
// O(fd_step^2) since the closed form solves the equation exactly.
cplx pde_residual(double x, double y, cplx z, double fd_step);

// Residuals of a and b in the characteristic ODE system, using exact
// derivatives of the closed forms. Zero up to rounding.
std::pair<cplx, cplx> ode_residual(double x, cplx z);

}  // namespace sinai::laws
