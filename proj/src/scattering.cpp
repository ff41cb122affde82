#include "abp/scattering.hpp"

#include <cmath>

#include "abp/specfun.hpp"

namespace abp {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr int kMaxEll = 100000;

double side_sign(Side side) { return side == Side::plus ? 1.0 : -1.0; }

// (+-i k)^p on the principal branch.
cplx ik_pow(double k, Side side, double p) {
    return std::pow(k, p) * std::exp(cplx(0.0, side_sign(side) * M_PI_2 * p));
}

// log |J_nu(x)| tail bound via the leading series term (x/2)^nu / Gamma(nu+1).
double log_j_bound(double nu, double x) {
    return nu * std::log(0.5 * x) - std::lgamma(nu + 1.0);
}

int spin_slot(Spin s) { return s == Spin::up ? 0 : 1; }

}  // namespace

double omega_pm(const WaveVector& kv, Side side) {
    return side == Side::plus ? kv.omega : kv.omega + M_PI;
}

Spinor plane_wave(Spin spin, const WaveVector& kv, const PolarPoint& x) {
    Spinor out = Spinor::Zero();
    out(spin_slot(spin)) =
        std::exp(cplx(0.0, kv.k * x.r * std::cos(x.theta - kv.omega))) / kTwoPi;
    return out;
}

namespace {

// Number of ladder rungs needed so the leading-term bound
// (x/2)^nu / Gamma(nu+1) of every dropped J falls below tol.
int j_ladder_length(double mu, double x, double tol) {
    int m = (int)std::ceil(std::max(4.0, x - mu));
    while (log_j_bound(mu + m, x) >= std::log(tol) && m < kMaxEll) ++m;
    return m + 1;
}

}  // namespace

Spinor plane_wave_partial(Spin spin, const WaveVector& kv, const PolarPoint& x, double tol) {
    const double kr = kv.k * x.r;
    const double u = x.theta - kv.omega;
    const auto j = specfun::bessel_j_ladder(0.0, kr, j_ladder_length(0.0, kr, 0.25 * tol));
    cplx sum = j[0];
    for (int ell = 1; ell < (int)j.size(); ++ell) {
        const cplx ipow = std::exp(cplx(0.0, M_PI_2 * ell));
        sum += ipow * j[(std::size_t)ell] *
               (std::exp(cplx(0.0, ell * u)) + std::exp(cplx(0.0, -ell * u)));
    }
    Spinor out = Spinor::Zero();
    out(spin_slot(spin)) = sum / kTwoPi;
    return out;
}

Spinor friedrichs_eigenfunction(const FluxAlpha& flux, Spin spin, const WaveVector& kv, Side side,
                                const PolarPoint& x, double tol) {
    Spinor out = Spinor::Zero();
    if (x.r == 0.0) return out;  // every order |l + a| is positive
    const double kr = kv.k * x.r;
    const double sgn = side_sign(side);
    const double om = omega_pm(kv, side);

    // orders alpha + m for l = m >= 0 and (1 - alpha) + m for l = -1 - m
    const auto jp =
        specfun::bessel_j_ladder(flux.nu0, kr, j_ladder_length(flux.nu0, kr, 0.25 * tol));
    const auto jm =
        specfun::bessel_j_ladder(flux.nu1, kr, j_ladder_length(flux.nu1, kr, 0.25 * tol));

    cplx sum = 0.0;
    for (int m = 0; m < (int)jp.size(); ++m)
        sum += std::exp(cplx(0.0, m * (x.theta - om) + sgn * M_PI_2 * (flux.nu0 + m))) *
               jp[(std::size_t)m];
    for (int m = 0; m < (int)jm.size(); ++m)
        sum += std::exp(cplx(0.0, (-1 - m) * (x.theta - om) + sgn * M_PI_2 * (flux.nu1 + m))) *
               jm[(std::size_t)m];
    out(spin_slot(spin)) = sum / kTwoPi;
    return out;
}

cplx tau_trace(const FluxAlpha& flux, Spin spin, const WaveVector& kv, Side side,
               const ChannelIndex& channel) {
    if (channel.spin != spin) return 0.0;
    const double nu = flux.order(channel.mode);
    return ik_pow(kv.k, side, nu) *
           std::exp(cplx(0.0, -channel.mode * omega_pm(kv, side))) / std::sqrt(kTwoPi);
}

Charge4 tau_vector(const FluxAlpha& flux, Spin spin, const WaveVector& kv, Side side) {
    Charge4 v;
    for (int i = 0; i < 4; ++i) v(i) = tau_trace(flux, spin, kv, side, ChannelIndex::from_flat(i));
    return v;
}

Spinor single_layer_limit(const FluxAlpha& flux, double lambda_energy, Side side, const Charge4& q,
                          const PolarPoint& x) {
    if (!(lambda_energy > 0.0)) throw domain_error("single_layer_limit: energy must be positive");
    if (!(x.r > 0.0)) throw domain_error("single_layer_limit: singular at r = 0");
    const double rootlam = std::sqrt(lambda_energy);
    const cplx w(0.0, -side_sign(side) * rootlam);  // e^{-+ i pi/2} sqrt(lambda)
    Spinor out = Spinor::Zero();
    for (int flat = 0; flat < 4; ++flat) {
        if (q(flat) == 0.0) continue;
        const auto ch = ChannelIndex::from_flat(flat);
        const double nu = flux.order(ch.mode);
        const cplx val = std::pow(w, nu) * specfun::bessel_k(nu, w * x.r) *
                         std::exp(cplx(0.0, ch.mode * x.theta)) / std::sqrt(kTwoPi);
        out(spin_slot(ch.spin)) += q(flat) * val;
    }
    return out;
}

Spinor theta_eigenfunction(const FluxAlpha& flux, const ExtensionParam& ext, Spin spin,
                           const WaveVector& kv, Side side, const PolarPoint& x, double tol) {
    Spinor out = friedrichs_eigenfunction(flux, spin, kv, side, x, tol);
    if (ext.is_friedrichs()) return out;
    if (!(x.r > 0.0)) throw domain_error("theta_eigenfunction: correction singular at r = 0");

    const Matrix4 m = lambda_limit_pm(flux, kv.energy(), side) + theta_of(flux, ext);
    Eigen::JacobiSVD<Matrix4> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.singularValues()(3) <= 1e-12 * svd.singularValues()(0))
        throw numerical_error("theta_eigenfunction",
                              "Lambda_pm + Theta singular (cannot occur for Hermitian Theta)");
    const Charge4 coeff = svd.solve(tau_vector(flux, spin, kv, side));
    return out + single_layer_limit(flux, kv.energy(), side, coeff, x);
}

cplx friedrichs_amplitude(const FluxAlpha& flux, double energy, double delta_omega) {
    if (!(energy > 0.0)) throw domain_error("friedrichs_amplitude: energy must be positive");
    const cplx eid = std::exp(cplx(0.0, delta_omega));
    if (std::abs(eid - 1.0) < 1e-8)
        throw domain_error("friedrichs_amplitude: forward direction is distributional");
    const cplx front = std::sqrt(kTwoPi / std::sqrt(energy)) * std::exp(cplx(0.0, -M_PI_4));
    return front * cplx(0.0, 1.0 / M_PI) * std::sin(M_PI * flux.alpha) / (eid - 1.0);
}

double friedrichs_cross_section(const FluxAlpha& flux, double energy, double omega) {
    if (!(energy > 0.0)) throw domain_error("friedrichs_cross_section: energy must be positive");
    const double s = std::sin(0.5 * omega);
    if (std::abs(s) < 1e-8)
        throw domain_error("friedrichs_cross_section: forward direction is distributional");
    const double sa = std::sin(M_PI * flux.alpha);
    return sa * sa / (kTwoPi * std::sqrt(energy) * s * s);
}

cplx theta_amplitude(const FluxAlpha& flux, const ExtensionParam& ext, const WaveVector& kv,
                     Side side, Spin spin_in, Spin spin_out, double theta_dir) {
    const double sgn = side_sign(side);
    const double om = omega_pm(kv, side);
    cplx out = 0.0;

    if (spin_in == spin_out) {
        // Abel-summed closed form of the Friedrichs partial-wave difference;
        // its pole sits opposite the reference direction, at theta = om + pi.
        const cplx den = 1.0 + std::exp(cplx(0.0, theta_dir - om));
        if (std::abs(den) < 1e-8)
            throw domain_error("theta_amplitude: Friedrichs term singular at theta = omega_pm + pi");
        const cplx pref =
            std::exp(cplx(0.0, sgn * M_PI_4)) / (std::pow(kTwoPi, 1.5) * std::sqrt(kv.k));
        out += pref * cplx(0.0, sgn * 2.0 * std::sin(M_PI * flux.alpha)) / den;
    }

    if (!ext.is_friedrichs()) {
        const Matrix4 minv =
            (lambda_limit_pm(flux, kv.energy(), side) + theta_of(flux, ext)).inverse();
        const cplx pref = std::exp(cplx(0.0, sgn * M_PI_4)) /
                          (2.0 * std::sqrt(kTwoPi) * std::sqrt(kv.k));
        cplx sum = 0.0;
        for (int lo = 0; lo < 2; ++lo) {
            const int ell_out = ChannelIndex::modes[lo];
            for (int li = 0; li < 2; ++li) {
                const int ell_in = ChannelIndex::modes[li];
                const cplx entry = minv(ChannelIndex(spin_out, ell_out).flat(),
                                        ChannelIndex(spin_in, ell_in).flat());
                // The incident trace carries (+-ik)^{nu}, the radiated layer
                // the opposite rotation (-+ik)^{nu'}.
                sum += entry * std::exp(cplx(0.0, ell_out * theta_dir - ell_in * om)) *
                       ik_pow(kv.k, side, flux.order(ell_in)) *
                       ik_pow(kv.k, side == Side::plus ? Side::minus : Side::plus,
                              flux.order(ell_out));
            }
        }
        out += pref * sum;
    }
    return out;
}

std::vector<ChannelPhase> s_matrix_phases(const FluxAlpha& flux, int ell_lo, int ell_hi) {
    if (ell_hi < ell_lo) throw domain_error("s_matrix_phases: empty range");
    std::vector<ChannelPhase> out;
    out.reserve(ell_hi - ell_lo + 1);
    for (int ell = ell_lo; ell <= ell_hi; ++ell)
        out.push_back({ell, std::exp(cplx(0.0, M_PI * (ell - std::abs(ell + flux.alpha))))});
    return out;
}

}  // namespace abp
