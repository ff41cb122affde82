#pragma once

#include <array>
#include <string>

#include "abp/extension.hpp"

namespace abp {

using Matrix2 = Eigen::Matrix2cd;
using Matrix2r = Eigen::Matrix2d;

// Pauli matrices.
Matrix2 sigma1();
Matrix2 sigma2();
Matrix2 sigma3();

struct SymmetryVerdict {
    bool admissible = false;
    // Transformed potential is A~(x) = potential_sign * T A(T^-1 x) + grad eta0.
    int potential_sign = 0;
    // Transformed field is b~(x) = field_sign * b(T^-1 x):
    // +det(T) for linear maps, -det(T) for anti-linear ones.
    int field_sign = 0;
    std::string reason;  // filled on rejection
};

// e^{-i eta.sigma} sigma_j e^{i eta.sigma} for j = 1,2,3 via the Rodrigues
// rotation formula; eta = 0 conjugates by the identity.
std::array<Matrix2, 3> rodrigues_conjugate(const Eigen::Vector3d& eta);

// Decide whether (S, T) preserves the Pauli / Dirac operator shape, checking
// the sigma_3 (resp. full sigma-vector) intertwining numerically.
// Throws domain_error for non-unitary S or non-orthogonal T.
SymmetryVerdict classify_pauli(const Matrix2& S, const Matrix2r& T, bool antilinear);
SymmetryVerdict classify_dirac(const Matrix2& S, const Matrix2r& T, bool antilinear);

// Invariance of the extension H^(beta) under the rotation-by-zeta /
// axial-angle-eta3 transformation: all phase conditions on L(lambda) + beta
// hold within 1e-12.
bool beta_invariance(const FluxAlpha& flux, const Matrix4& beta, double eta3, double zeta,
                     double lambda);

}  // namespace abp
