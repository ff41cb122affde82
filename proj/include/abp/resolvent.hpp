#pragma once

#include <optional>
#include <vector>

#include "abp/extension.hpp"

namespace abp {

struct PolarPoint {
    double r;
    double theta;

    PolarPoint(double rr, double th) : r(rr), theta(th) {
        if (!(rr >= 0.0) || !std::isfinite(rr)) throw domain_error("PolarPoint: bad radius");
        theta = std::fmod(th, 2.0 * M_PI);
        if (theta < 0.0) theta += 2.0 * M_PI;
    }
};

// 2x2 spin block of a resolvent kernel at a pair of points. Off-diagonal
// spin entries vanish for the Friedrichs kernel.
using KernelValue = Eigen::Matrix2cd;

// Friedrichs resolvent kernel
//   sum_l I_nu(-i sqrt z (r^r')) K_nu(-i sqrt z (r v r')) e^{i l (th-th')} / (2 pi)
// on the spin diagonal. The l-sum is truncated once the certified tail drops
// below tol; nearly equal radii make the tail bound useless and raise a
// numerical_error (the kernel diverges logarithmically at coincident points).
KernelValue friedrichs_kernel(const FluxAlpha& flux, const SpectralPoint& z, const PolarPoint& x,
                              const PolarPoint& xp, double tol = 1e-10);

// Single layer G(z) q evaluated at x.
Spinor single_layer(const FluxAlpha& flux, const SpectralPoint& z, const Charge4& q,
                    const PolarPoint& x);

// Rank-4 Krein correction and the full resolvent kernel of H^(Theta).
KernelValue krein_correction(const FluxAlpha& flux, const ExtensionParam& ext,
                             const SpectralPoint& z, const PolarPoint& x, const PolarPoint& xp);
KernelValue krein_kernel(const FluxAlpha& flux, const ExtensionParam& ext, const SpectralPoint& z,
                         const PolarPoint& x, const PolarPoint& xp, double tol = 1e-10);

struct EigenvalueRecord {
    double mu;  // eigenvalue is -mu
    int multiplicity;
    std::vector<Charge4> kernel_basis;
};

// Negative point spectrum: roots of det[Lambda(-mu) + Theta] = 0 located by
// a sign-change scan of the (monotone) eigenvalue branches on a log grid,
// refined by bisection. Friedrichs has empty point spectrum.
std::vector<EigenvalueRecord> point_spectrum(const FluxAlpha& flux, const ExtensionParam& ext,
                                             double mu_lo, double mu_hi, double tol = 1e-12,
                                             int pts_per_decade = 400);

// Eigenfunction G(-mu) q for a charge in the record's kernel basis.
Spinor bound_state(const FluxAlpha& flux, const ExtensionParam& ext, const EigenvalueRecord& rec,
                   const Charge4& q, const PolarPoint& x);

struct ZeroResonance {
    std::vector<Charge4> charges;  // kernel of Lambda(0) + Theta
};

// Zero-energy resonance space; empty optional when there is none (always for
// Friedrichs). Profiles are evaluated by resonance_profile.
std::optional<ZeroResonance> zero_resonance(const FluxAlpha& flux, const ExtensionParam& ext);
Spinor resonance_profile(const FluxAlpha& flux, const Charge4& q, const PolarPoint& x);

// Smallest singular value of Lambda_pm(lambda) + Theta; its positive lower
// bound (pi/2) min(lambda^a, lambda^{1-a}) is what keeps the boundary
// values invertible for Hermitian Theta.
double sigma_min_lambda_pm(const FluxAlpha& flux, const Matrix4& theta, double lambda, Side side);

// lambda > 0 where Lambda_pm(lambda) + Theta drops below the singularity
// threshold on a log grid; expected empty for every Hermitian Theta.
std::vector<double> exceptional_points(const FluxAlpha& flux, const ExtensionParam& ext,
                                       double lam_lo, double lam_hi, int grid_points = 2000);

}  // namespace abp
