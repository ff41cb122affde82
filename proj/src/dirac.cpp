#include "abp/dirac.hpp"

#include <cmath>

#include "abp/specfun.hpp"

namespace abp {

DiracBoundary dirac_traces(const FluxAlpha& flux, cplx mu, double gamma, bool regular_vanishes) {
    if (!regular_vanishes)
        throw domain_error("dirac_traces: regular part must vanish at the origin");
    const double a = flux.alpha;
    const cplx eig = std::exp(cplx(0.0, gamma));
    DiracBoundary b;
    b.c_up_minus_alpha = 0.0;
    b.c_up_alpha_m1 = mu * (1.0 + eig) * std::pow(2.0, -a) * specfun::gamma(1.0 - a);
    b.c_down_alpha_m1 = 0.0;
    b.c_down_minus_alpha = mu * (1.0 - eig) * std::pow(2.0, -(1.0 - a)) * specfun::gamma(a);
    return b;
}

bool dirac_membership(const FluxAlpha& flux, double gamma, const DiracBoundary& tr, double tol) {
    const double a = flux.alpha;
    const double kappa = std::pow(2.0, 1.0 - 2.0 * a) * specfun::gamma(1.0 - a) / specfun::gamma(a);
    const cplx eig = std::exp(cplx(0.0, gamma));
    const cplx lhs = (1.0 - eig) * tr.c_up_alpha_m1;
    const cplx rhs = (1.0 + eig) * kappa * tr.c_down_minus_alpha;

    const double scale = std::max({1.0, std::abs(tr.c_up_alpha_m1), kappa * std::abs(tr.c_down_minus_alpha)});
    if (std::abs(tr.c_up_minus_alpha) > tol * scale) return false;
    if (std::abs(tr.c_down_alpha_m1) > tol * scale) return false;
    return std::abs(lhs - rhs) <= tol * scale;
}

DiracSquareSystem dirac_square_charges(double gamma) {
    DiracSquareSystem sys;
    sys.gamma = gamma;
    const double s = std::sin(gamma);
    sys.pole = std::abs(std::sin(0.5 * gamma)) < 1e-12 || std::abs(std::cos(0.5 * gamma)) < 1e-12;
    sys.determinant = sys.pole ? cplx(0.0, 0.0) : cplx(0.0, 2.0 / s);
    sys.only_trivial = true;  // cot and tan conditions are never compatible with q != 0
    return sys;
}

Spinor dirac_defect_xi(const FluxAlpha& flux, Side side, double r, double theta) {
    if (!(r > 0.0)) throw domain_error("dirac_defect_xi: singular at r = 0");
    Spinor xi;
    xi(0) = specfun::bessel_k(1.0 - flux.alpha, r) * std::exp(cplx(0.0, -theta));
    xi(1) = (side == Side::plus ? 1.0 : -1.0) * specfun::bessel_k(flux.alpha, r);
    return xi;
}

}  // namespace abp
