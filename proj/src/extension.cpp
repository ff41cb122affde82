#include "abp/extension.hpp"

#include <cmath>

#include "abp/specfun.hpp"

namespace abp {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;

cplx angular_phase(int mode, double theta) {
    return std::exp(cplx(0.0, mode * theta)) / std::sqrt(kTwoPi);
}
}  // namespace

ReducedFlux reduce_flux(double alpha_raw) {
    const double fl = std::floor(alpha_raw);
    const double frac = alpha_raw - fl;
    if (frac == 0.0) throw domain_error("reduce_flux: integer flux is unitarily trivial");
    return {FluxAlpha(frac), (long)fl};
}

Matrix4 l_matrix(const FluxAlpha& flux, double lambda) {
    if (!(lambda > 0.0)) throw domain_error("l_matrix: lambda must be positive");
    const double c = M_PI / (2.0 * std::sin(M_PI * flux.alpha));
    Matrix4 m = Matrix4::Zero();
    for (int i = 0; i < 4; ++i)
        m(i, i) = c * std::pow(lambda, 2.0 * flux.order_flat(i));
    return m;
}

Matrix4 lambda_weyl(const FluxAlpha& flux, const SpectralPoint& z) {
    const double c = M_PI / (2.0 * std::sin(M_PI * flux.alpha));
    Matrix4 m = Matrix4::Zero();
    for (int i = 0; i < 4; ++i)
        m(i, i) = c * (std::pow(z.minus_i_sqrt_z, 2.0 * flux.order_flat(i)) - 1.0);
    return m;
}

Matrix4 lambda_limit_pm(const FluxAlpha& flux, double lambda, Side side) {
    if (!(lambda > 0.0)) throw domain_error("lambda_limit_pm: lambda must be positive");
    const double sgn = (side == Side::plus) ? -1.0 : 1.0;
    Matrix4 m = Matrix4::Zero();
    for (int i = 0; i < 4; ++i) {
        const double nu = flux.order_flat(i);
        const cplx phase = std::exp(cplx(0.0, sgn * M_PI * nu));
        m(i, i) = M_PI / (2.0 * std::sin(M_PI * nu)) * (phase * std::pow(lambda, nu) - 1.0);
    }
    return m;
}

double conversion_shift(const FluxAlpha& flux) {
    return M_PI / (2.0 * std::sin(M_PI * flux.alpha));
}

Matrix4 theta_from_beta(const FluxAlpha& flux, const Matrix4& beta) {
    return beta + conversion_shift(flux) * Matrix4::Identity();
}

Matrix4 beta_from_theta(const FluxAlpha& flux, const Matrix4& theta) {
    return theta - conversion_shift(flux) * Matrix4::Identity();
}

Matrix4 theta_of(const FluxAlpha& flux, const ExtensionParam& ext) {
    switch (ext.kind()) {
        case ExtensionParam::Kind::theta:
            return ext.matrix();
        case ExtensionParam::Kind::beta:
            return theta_from_beta(flux, ext.matrix());
        default:
            throw domain_error("theta_of: Friedrichs extension has no finite Theta");
    }
}

cplx defect_g(const FluxAlpha& flux, int mode, double lambda, double r, double theta) {
    if (!(r > 0.0)) throw domain_error("defect_g: singular at r = 0");
    if (!(lambda > 0.0)) throw domain_error("defect_g: lambda must be positive");
    const double nu = flux.order(mode);
    return std::pow(lambda, nu) * specfun::bessel_k(nu, lambda * r) * angular_phase(mode, theta);
}

double defect_norm_sq(const FluxAlpha& flux, int mode, double lambda) {
    if (!(lambda > 0.0)) throw domain_error("defect_norm_sq: lambda must be positive");
    const double nu = flux.order(mode);
    return M_PI * nu * std::pow(lambda, 2.0 * nu - 2.0) / (2.0 * std::sin(M_PI * flux.alpha));
}

SmallRCoefficients small_r_expansion(const FluxAlpha& flux, int mode, double lambda) {
    if (!(lambda > 0.0)) throw domain_error("small_r_expansion: lambda must be positive");
    const double nu = flux.order(mode);
    return {specfun::gamma(nu) / std::pow(2.0, 1.0 - nu),
            specfun::gamma(-nu) * std::pow(lambda, 2.0 * nu) / std::pow(2.0, 1.0 + nu)};
}

cplx defect_g_vn(const FluxAlpha& flux, int mode, Side side, double r, double theta) {
    if (!(r > 0.0)) throw domain_error("defect_g_vn: singular at r = 0");
    const double nu = flux.order(mode);
    const double sgn = (side == Side::plus) ? -1.0 : 1.0;
    const cplx rot = std::exp(cplx(0.0, sgn * M_PI / 4.0));
    const cplx pref = std::exp(cplx(0.0, sgn * M_PI * nu / 4.0)) *
                      std::sqrt(4.0 / M_PI * std::cos(M_PI * nu / 2.0));
    return pref * specfun::bessel_k(nu, rot * r) * angular_phase(mode, theta);
}

}  // namespace abp
