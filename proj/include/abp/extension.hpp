#pragma once

#include "abp/channels.hpp"

namespace abp {

enum class Side { plus, minus };

struct ReducedFlux {
    FluxAlpha flux;
    long winding;  // floor of the raw flux; documents the removed phase e^{-i floor(a) theta}
};

// Strip the integer part of the flux (gauge-like unitary reduction).
// Integer flux is rejected: it is unitarily trivial.
ReducedFlux reduce_flux(double alpha_raw);

// Diagonal matrix pi lambda^{2 nu_l} / (2 sin pi alpha) entering the
// quadratic-form boundary condition.
Matrix4 l_matrix(const FluxAlpha& flux, double lambda);

// Weyl matrix Lambda(z): diagonal pi/(2 sin pi alpha) [(-i sqrt z)^{2 nu_l} - 1].
Matrix4 lambda_weyl(const FluxAlpha& flux, const SpectralPoint& z);

// Boundary values Lambda_pm(lambda) = lim Lambda(lambda +- i eps):
// diagonal pi/(2 sin pi nu_l) [e^{-+ i pi nu_l} lambda^{nu_l} - 1].
Matrix4 lambda_limit_pm(const FluxAlpha& flux, double lambda, Side side);

// lambda-independent shift pi/(2 sin pi alpha) relating the two
// parametrizations: Theta = beta + shift * Id.
double conversion_shift(const FluxAlpha& flux);
Matrix4 theta_from_beta(const FluxAlpha& flux, const Matrix4& beta);
Matrix4 beta_from_theta(const FluxAlpha& flux, const Matrix4& theta);

// Resolve an ExtensionParam to its Theta matrix. Throws for Friedrichs.
Matrix4 theta_of(const FluxAlpha& flux, const ExtensionParam& ext);

// Defect function g_lambda^(l)(r,theta) = lambda^nu K_nu(lambda r) e^{i l theta}/sqrt(2 pi).
cplx defect_g(const FluxAlpha& flux, int mode, double lambda, double r, double theta);

// ||g_lambda^(l)||^2 = pi nu_l lambda^{2 nu_l - 2} / (2 sin pi alpha).
double defect_norm_sq(const FluxAlpha& flux, int mode, double lambda);

// Coefficients of r^{-nu} and r^{nu} in the small-r expansion of the
// radial part of g_lambda^(l).
struct SmallRCoefficients {
    double c_singular;  // Gamma(nu) / 2^{1-nu}
    double c_regular;   // Gamma(-nu) lambda^{2 nu} / 2^{1+nu}
};
SmallRCoefficients small_r_expansion(const FluxAlpha& flux, int mode, double lambda);

// Normalized von Neumann defect functions
// e^{-+ i pi nu/4} sqrt((4/pi) cos(pi nu/2)) K_nu(e^{-+ i pi/4} r) e^{i l theta}/sqrt(2 pi).
cplx defect_g_vn(const FluxAlpha& flux, int mode, Side side, double r, double theta);

}  // namespace abp
