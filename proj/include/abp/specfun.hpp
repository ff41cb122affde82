#pragma once

#include <complex>
#include <vector>

namespace abp::specfun {

using cplx = std::complex<double>;

// Real-order cylinder functions on the arguments this library actually uses:
// real x >= 0 for J/Y/H, and complex z with |arg z| <= pi/2 for I/K (the rays
// -i*sqrt(z), e^{-+i pi/4} x and e^{-+i pi/2} x). Ascending series are summed
// in __float128 up to |z| = 18, large-argument expansions take over beyond;
// K_nu uses the reflection pi (I_{-nu} - I_nu) / (2 sin nu pi), which is why
// orders within 1e-6 of an integer are rejected wherever reflection enters.

// Euler Gamma. Throws abp::domain_error at the poles x = 0, -1, -2, ...
double gamma(double x);

// J_nu(x) for nu >= 0 (integer orders allowed), x >= 0.
double bessel_j(double nu, double x);

// I_nu, K_nu for nu > 0. K additionally requires nu away from integers,
// z != 0 and |arg z| < pi. bessel_i throws on exponent-range overflow.
cplx bessel_i(double nu, cplx z);
cplx bessel_k(double nu, cplx z);
double bessel_i(double nu, double x);
double bessel_k(double nu, double x);

// H^(1)_nu(x) = J_nu(x) + i Y_nu(x) and its conjugate for x > 0, nu > 0
// away from integers.
cplx hankel1(double nu, double x);
cplx hankel2(double nu, double x);

// Order ladders J_{mu+m}, I_{mu+m}, K_{mu+m} for m = 0..count-1, as needed
// by the partial-wave sums: K by stable upward recurrence, J and I by
// backward (Miller) recurrence normalized against the base orders. mu in
// [0, 2] (non-integer for K).
std::vector<double> bessel_j_ladder(double mu, double x, int count);
std::vector<cplx> bessel_i_ladder(double mu, cplx z, int count);
std::vector<cplx> bessel_k_ladder(double mu, cplx z, int count);

// I_nu(a) K_nu(b) through the reflection series, stable at orders far above
// |a|, |b| where the separate factors would under/overflow.
cplx bessel_ik_product_large_order(double nu, cplx a, cplx b);

}  // namespace abp::specfun
