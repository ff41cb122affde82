#pragma once

#include "abp/extension.hpp"

namespace abp {

// Boundary values c^s_{-a}, c^s_{a-1} of a spinor in the Dirac domain.
struct DiracBoundary {
    cplx c_up_minus_alpha;
    cplx c_up_alpha_m1;
    cplx c_down_minus_alpha;
    cplx c_down_alpha_m1;
};

// Closed-form traces of psi = mu (xi_+ + e^{i gamma} xi_-) plus a regular
// part vanishing at the origin:
//   c^up_{-a} = 0,   c^up_{a-1}  = mu (1 + e^{i gamma}) 2^{-a}     Gamma(1-a),
//   c^dn_{a-1} = 0,  c^dn_{-a}   = mu (1 - e^{i gamma}) 2^{-(1-a)} Gamma(a).
// Throws if the regular part is flagged as not vanishing.
DiracBoundary dirac_traces(const FluxAlpha& flux, cplx mu, double gamma,
                           bool regular_vanishes = true);

// Membership of a spinor (given through its boundary values) in the domain
// of the gamma-extension. Uses the pole-free two-sided condition
//   (1 - e^{i gamma}) c^up_{a-1} = (1 + e^{i gamma}) kappa(a) c^dn_{-a},
// kappa = 2^{1-2a} Gamma(1-a) / Gamma(a), which at gamma = 0 degenerates to
// c^dn_{-a} = 0 instead of a cot pole.
bool dirac_membership(const FluxAlpha& flux, double gamma, const DiracBoundary& traces,
                      double tol = 1e-9);

// Charge relations forced on D(H_P^beta) intersect D((H_D^gamma)^2):
//   q_up^(0) = 0, q_dn^(-1) = 0,
//   q_up^(-1) =  i cot(gamma/2) q_dn^(0),
//   q_up^(-1) = -i tan(gamma/2) q_dn^(0).
// The pair has determinant 2i / sin(gamma); at gamma in {0, pi} one of the
// poles forces the respective charge to vanish directly. Either way only
// q = 0 survives, which is the computable content of (H_D^gamma)^2 = H_P^(F).
struct DiracSquareSystem {
    double gamma;
    bool pole;         // gamma at 0 or pi: one-sided conditions apply
    cplx determinant;  // 2i / sin(gamma); meaningful off the poles
    bool only_trivial;
};
DiracSquareSystem dirac_square_charges(double gamma);

// Defect spinors xi_pm(r,theta) = (K_{1-a}(r) e^{-i theta}, +- K_a(r)).
Spinor dirac_defect_xi(const FluxAlpha& flux, Side side, double r, double theta);

}  // namespace abp
