#pragma once

#include <vector>

#include "abp/resolvent.hpp"

namespace abp {

struct WaveVector {
    double k;      // magnitude > 0
    double omega;  // direction in [0, 2 pi)

    WaveVector(double kk, double om) : k(kk), omega(om) {
        if (!(kk > 0.0)) throw domain_error("WaveVector: k must be positive");
        omega = std::fmod(om, 2.0 * M_PI);
        if (omega < 0.0) omega += 2.0 * M_PI;
    }

    double energy() const { return k * k; }
};

struct ChannelPhase {
    int ell;
    cplx phase;  // unimodular
};

// omega_+ = omega, omega_- = omega + pi.
double omega_pm(const WaveVector& kv, Side side);

// Plane wave (1/2pi) e^{i k.x} in the given spin slot, and its partial-wave
// resummation used for cross validation.
Spinor plane_wave(Spin spin, const WaveVector& kv, const PolarPoint& x);
Spinor plane_wave_partial(Spin spin, const WaveVector& kv, const PolarPoint& x,
                          double tol = 1e-10);

// Generalized eigenfunction of the Friedrichs extension:
// (1/2pi) sum_l e^{i l (theta - omega_pm) +- i pi |l+a|/2} J_{|l+a|}(k r).
Spinor friedrichs_eigenfunction(const FluxAlpha& flux, Spin spin, const WaveVector& kv, Side side,
                                const PolarPoint& x, double tol = 1e-10);

// Trace of the Friedrichs eigenfunction in closed form:
// (+- i k)^{nu_l} e^{-i l omega_pm} / sqrt(2 pi) on the matching spin.
cplx tau_trace(const FluxAlpha& flux, Spin spin, const WaveVector& kv, Side side,
               const ChannelIndex& channel);
Charge4 tau_vector(const FluxAlpha& flux, Spin spin, const WaveVector& kv, Side side);

// Boundary values G_pm(lambda) q of the single layer, computed with K_nu at
// the rotated argument e^{-+ i pi/2} sqrt(lambda) r.
Spinor single_layer_limit(const FluxAlpha& flux, double lambda_energy, Side side, const Charge4& q,
                          const PolarPoint& x);

// Generalized eigenfunction of H^(Theta):
//   phi^(F,pm) + G_pm(k^2) [Lambda_pm(k^2) + Theta]^{-1} tau phi^(F,pm).
Spinor theta_eigenfunction(const FluxAlpha& flux, const ExtensionParam& ext, Spin spin,
                           const WaveVector& kv, Side side, const PolarPoint& x,
                           double tol = 1e-10);

// Off-forward scattering amplitude of the Friedrichs extension,
// (2pi/(i sqrt(lambda)))^{1/2} (i/pi) sin(pi a) / (e^{i dw} - 1),
// and the matching differential cross section
// (1/(2 pi sqrt(lambda))) sin^2(pi a) / sin^2(w/2).
cplx friedrichs_amplitude(const FluxAlpha& flux, double energy, double delta_omega);
double friedrichs_cross_section(const FluxAlpha& flux, double energy, double omega);

// Far-field coefficient of theta_eigenfunction - plane_wave at direction
// theta_dir (coefficient of r^{-1/2} waves, plane waves normalized 1/2pi):
// the Abel-summed Friedrichs part plus the extension part
//   e^{+-i pi/4}/(2 sqrt(2 pi) sqrt(k)) *
//     sum [Lambda_pm + Theta]^{-1}_{(s',l'),(s,l)}
//         e^{i(l' theta - l omega_pm)} (+-ik)^{nu_l} (-+ik)^{nu_l'}.
// The Friedrichs part is singular where the Abel sum has its pole,
// theta_dir = omega_pm + pi.
cplx theta_amplitude(const FluxAlpha& flux, const ExtensionParam& ext, const WaveVector& kv,
                     Side side, Spin spin_in, Spin spin_out, double theta_dir);

// Partial-wave phases S_l = e^{i pi (l - |l + a|)}.
std::vector<ChannelPhase> s_matrix_phases(const FluxAlpha& flux, int ell_lo, int ell_hi);

}  // namespace abp
