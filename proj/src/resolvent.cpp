#include "abp/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "abp/specfun.hpp"

namespace abp {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr int kMaxEll = 20000;
constexpr double kSingularRel = 1e-12;

cplx channel_radial(const FluxAlpha& flux, int mode, cplx w, double r) {
    const double nu = flux.order(mode);
    return std::pow(w, nu) * specfun::bessel_k(nu, w * r);
}

Matrix4 invert_checked(const Matrix4& m, const char* op) {
    Eigen::JacobiSVD<Matrix4> svd(m);
    const auto& sv = svd.singularValues();
    if (sv(3) <= kSingularRel * sv(0))
        throw numerical_error(op, "Lambda(z) + Theta is singular (spectral point)");
    return m.inverse();
}

}  // namespace

KernelValue friedrichs_kernel(const FluxAlpha& flux, const SpectralPoint& z, const PolarPoint& x,
                              const PolarPoint& xp, double tol) {
    if (!(x.r > 0.0) || !(xp.r > 0.0))
        throw domain_error("friedrichs_kernel: points must avoid the flux at the origin");
    const double rmin = std::min(x.r, xp.r);
    const double rmax = std::max(x.r, xp.r);
    const double rho = rmin / rmax;
    const double dth = x.theta - xp.theta;
    if (rho > 1.0 - 1e-9)
        throw numerical_error("friedrichs_kernel",
                              "cannot certify the angular tail at (nearly) coincident radii; "
                              "the kernel diverges at coincident points");

    const cplx w = z.minus_i_sqrt_z;
    const cplx a = w * rmin;
    const cplx b = w * rmax;
    // every term carries e^{-Re w (rmax - rmin)}; below the double range
    // the whole sum is an exact zero
    if (w.real() * (rmax - rmin) > 760.0) return KernelValue::Zero();

    // Orders below nu_unif come from the I/K ladders; beyond that the
    // separate factors drift out of range and the reflection-series form of
    // the product takes over.
    const double nu_unif = std::max(8.0, 1.6 * std::abs(b));
    const int rungs0 = (int)std::ceil(nu_unif - flux.nu0) + 1;
    const int rungs1 = (int)std::ceil(nu_unif - flux.nu1) + 1;
    const auto ip = specfun::bessel_i_ladder(flux.nu0, a, rungs0);
    const auto kp = specfun::bessel_k_ladder(flux.nu0, b, rungs0);
    const auto im = specfun::bessel_i_ladder(flux.nu1, a, rungs1);
    const auto km = specfun::bessel_k_ladder(flux.nu1, b, rungs1);

    auto term = [&](int ell) {
        const double nu = std::abs(ell + flux.alpha);
        cplx prod;
        if (ell >= 0)
            prod = ell < rungs0 ? ip[(std::size_t)ell] * kp[(std::size_t)ell]
                                : specfun::bessel_ik_product_large_order(nu, a, b);
        else
            prod = (-1 - ell) < rungs1 ? im[(std::size_t)(-1 - ell)] * km[(std::size_t)(-1 - ell)]
                                       : specfun::bessel_ik_product_large_order(nu, a, b);
        return prod * std::exp(cplx(0.0, ell * dth));
    };

    cplx sum = term(0) + term(-1);
    const double geo = rho / (1.0 - rho);
    for (int m = 1; m <= kMaxEll; ++m) {
        const cplx tp = term(m);
        const cplx tm = term(-1 - m);
        sum += tp + tm;
        const double nu_min = m + std::min(flux.alpha, 1.0 - flux.alpha);
        if (nu_min > std::abs(b) && (std::abs(tp) + std::abs(tm)) * geo < tol) break;
        if (m == kMaxEll)
            throw numerical_error("friedrichs_kernel", "angular sum failed to reach tolerance");
    }
    return (sum / kTwoPi) * KernelValue::Identity();
}

Spinor single_layer(const FluxAlpha& flux, const SpectralPoint& z, const Charge4& q,
                    const PolarPoint& x) {
    if (!(x.r > 0.0)) throw domain_error("single_layer: singular at r = 0");
    const cplx w = z.minus_i_sqrt_z;
    Spinor out = Spinor::Zero();
    for (int flat = 0; flat < 4; ++flat) {
        if (q(flat) == 0.0) continue;
        const auto ch = ChannelIndex::from_flat(flat);
        const cplx radial = channel_radial(flux, ch.mode, w, x.r);
        const cplx phase = std::exp(cplx(0.0, ch.mode * x.theta)) / std::sqrt(kTwoPi);
        out(ch.spin == Spin::up ? 0 : 1) += q(flat) * radial * phase;
    }
    return out;
}

KernelValue krein_correction(const FluxAlpha& flux, const ExtensionParam& ext,
                             const SpectralPoint& z, const PolarPoint& x, const PolarPoint& xp) {
    if (ext.is_friedrichs()) return KernelValue::Zero();
    if (!(x.r > 0.0) || !(xp.r > 0.0))
        throw domain_error("krein_correction: points must avoid the origin");

    const Matrix4 minv = invert_checked(lambda_weyl(flux, z) + theta_of(flux, ext), "krein_kernel");
    const cplx w = z.minus_i_sqrt_z;

    // Channel factors: g carries e^{+i l theta} at x, the dual factor at x'
    // carries the conjugated angular phase.
    std::array<cplx, 2> gx, gxp;
    for (int m = 0; m < 2; ++m) {
        const int mode = ChannelIndex::modes[m];
        gx[m] = channel_radial(flux, mode, w, x.r) * std::exp(cplx(0.0, mode * x.theta)) /
                std::sqrt(kTwoPi);
        gxp[m] = channel_radial(flux, mode, w, xp.r) * std::exp(cplx(0.0, -mode * xp.theta)) /
                 std::sqrt(kTwoPi);
    }

    KernelValue out = KernelValue::Zero();
    for (int i = 0; i < 4; ++i) {
        const auto ci = ChannelIndex::from_flat(i);
        for (int j = 0; j < 4; ++j) {
            const auto cj = ChannelIndex::from_flat(j);
            out(ci.spin == Spin::up ? 0 : 1, cj.spin == Spin::up ? 0 : 1) +=
                gx[ci.mode == 0 ? 0 : 1] * minv(i, j) * gxp[cj.mode == 0 ? 0 : 1];
        }
    }
    return out;
}

KernelValue krein_kernel(const FluxAlpha& flux, const ExtensionParam& ext, const SpectralPoint& z,
                         const PolarPoint& x, const PolarPoint& xp, double tol) {
    KernelValue k = friedrichs_kernel(flux, z, x, xp, tol);
    if (!ext.is_friedrichs()) k += krein_correction(flux, ext, z, x, xp);
    return k;
}

namespace {

Eigen::Vector4d branch_eigenvalues(const FluxAlpha& flux, const Matrix4& theta, double mu) {
    const double c = M_PI / (2.0 * std::sin(M_PI * flux.alpha));
    Matrix4 m = theta;
    for (int i = 0; i < 4; ++i)
        m(i, i) += c * (std::pow(mu, flux.order_flat(i)) - 1.0);
    Eigen::SelfAdjointEigenSolver<Matrix4> es(m);
    return es.eigenvalues();
}

}  // namespace

std::vector<EigenvalueRecord> point_spectrum(const FluxAlpha& flux, const ExtensionParam& ext,
                                             double mu_lo, double mu_hi, double tol,
                                             int pts_per_decade) {
    if (ext.is_friedrichs()) return {};
    if (!(mu_lo > 0.0) || !(mu_hi > mu_lo))
        throw domain_error("point_spectrum: need 0 < mu_lo < mu_hi");

    const Matrix4 theta = theta_of(flux, ext);
    const double decades = std::log10(mu_hi / mu_lo);
    const int n = std::max(2, (int)std::ceil(decades * pts_per_decade) + 1);

    std::vector<double> roots;
    Eigen::Vector4d prev = branch_eigenvalues(flux, theta, mu_lo);
    double mu_prev = mu_lo;
    for (int i = 1; i < n; ++i) {
        const double mu = mu_lo * std::pow(mu_hi / mu_lo, (double)i / (n - 1));
        const Eigen::Vector4d cur = branch_eigenvalues(flux, theta, mu);
        for (int k = 0; k < 4; ++k) {
            // Half-open bracket: a zero landing exactly on a grid point is
            // claimed by the interval to its left only.
            if (!(prev(k) < 0.0 && cur(k) >= 0.0)) continue;  // branches increase in mu
            double a = mu_prev, b = mu;
            const double width = std::max(0.125 * tol, 4.0 * std::numeric_limits<double>::epsilon());
            for (int it = 0; it < 200 && (b - a) > width * a; ++it) {
                const double mid = std::sqrt(a * b);
                if (branch_eigenvalues(flux, theta, mid)(k) < 0.0)
                    a = mid;
                else
                    b = mid;
            }
            roots.push_back(0.5 * (a + b));
        }
        prev = cur;
        mu_prev = mu;
    }

    std::sort(roots.begin(), roots.end());
    std::vector<EigenvalueRecord> out;
    std::size_t i = 0;
    while (i < roots.size()) {
        std::size_t j = i + 1;
        while (j < roots.size() && roots[j] - roots[i] <= 1e-8 * roots[i]) ++j;
        EigenvalueRecord rec;
        rec.mu = roots[i + (j - i) / 2];
        rec.multiplicity = (int)(j - i);

        const double c = M_PI / (2.0 * std::sin(M_PI * flux.alpha));
        Matrix4 m = theta;
        for (int d = 0; d < 4; ++d)
            m(d, d) += c * (std::pow(rec.mu, flux.order_flat(d)) - 1.0);
        Eigen::SelfAdjointEigenSolver<Matrix4> es(m);
        std::array<int, 4> order{0, 1, 2, 3};
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return std::abs(es.eigenvalues()(a)) < std::abs(es.eigenvalues()(b));
        });
        for (int k = 0; k < rec.multiplicity; ++k)
            rec.kernel_basis.push_back(es.eigenvectors().col(order[k]));
        out.push_back(std::move(rec));
        i = j;
    }
    return out;
}

Spinor bound_state(const FluxAlpha& flux, const ExtensionParam& ext, const EigenvalueRecord& rec,
                   const Charge4& q, const PolarPoint& x) {
    const double c = M_PI / (2.0 * std::sin(M_PI * flux.alpha));
    Matrix4 m = theta_of(flux, ext);
    for (int d = 0; d < 4; ++d)
        m(d, d) += c * (std::pow(rec.mu, flux.order_flat(d)) - 1.0);
    if ((m * q).norm() > 1e-8 * q.norm())
        throw domain_error("bound_state: charge is not in the eigenvalue kernel");
    return single_layer(flux, SpectralPoint(cplx(-rec.mu, 0.0)), q, x);
}

std::optional<ZeroResonance> zero_resonance(const FluxAlpha& flux, const ExtensionParam& ext) {
    if (ext.is_friedrichs()) return std::nullopt;
    const Matrix4 m0 = theta_of(flux, ext) - conversion_shift(flux) * Matrix4::Identity();
    Eigen::SelfAdjointEigenSolver<Matrix4> es(m0);
    ZeroResonance res;
    for (int i = 0; i < 4; ++i)
        if (std::abs(es.eigenvalues()(i)) < 1e-10) res.charges.push_back(es.eigenvectors().col(i));
    if (res.charges.empty()) return std::nullopt;
    return res;
}

Spinor resonance_profile(const FluxAlpha& flux, const Charge4& q, const PolarPoint& x) {
    if (!(x.r > 0.0)) throw domain_error("resonance_profile: singular at r = 0");
    Spinor out = Spinor::Zero();
    for (int flat = 0; flat < 4; ++flat) {
        if (q(flat) == 0.0) continue;
        const auto ch = ChannelIndex::from_flat(flat);
        const double nu = flux.order(ch.mode);
        const double radial =
            std::pow(2.0, nu - 1.0) * specfun::gamma(nu) * std::pow(x.r, -nu);
        const cplx phase = std::exp(cplx(0.0, ch.mode * x.theta)) / std::sqrt(kTwoPi);
        out(ch.spin == Spin::up ? 0 : 1) += q(flat) * radial * phase;
    }
    return out;
}

double sigma_min_lambda_pm(const FluxAlpha& flux, const Matrix4& theta, double lambda, Side side) {
    Eigen::JacobiSVD<Matrix4> svd(lambda_limit_pm(flux, lambda, side) + theta);
    return svd.singularValues()(3);
}

std::vector<double> exceptional_points(const FluxAlpha& flux, const ExtensionParam& ext,
                                       double lam_lo, double lam_hi, int grid_points) {
    if (ext.is_friedrichs())
        throw domain_error("exceptional_points: requires a finite Theta extension");
    if (!(lam_lo > 0.0) || !(lam_hi > lam_lo))
        throw domain_error("exceptional_points: need 0 < lam_lo < lam_hi");
    const Matrix4 theta = theta_of(flux, ext);
    std::vector<double> out;
    for (int i = 0; i < grid_points; ++i) {
        const double lam = lam_lo * std::pow(lam_hi / lam_lo, (double)i / (grid_points - 1));
        if (sigma_min_lambda_pm(flux, theta, lam, Side::plus) < 1e-10 ||
            sigma_min_lambda_pm(flux, theta, lam, Side::minus) < 1e-10)
            out.push_back(lam);
    }
    return out;
}

}  // namespace abp
