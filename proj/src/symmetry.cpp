#include "abp/symmetry.hpp"

#include <cmath>

namespace abp {

namespace {

constexpr double kMatTol = 1e-10;

bool is_unitary(const Matrix2& s) { return (s.adjoint() * s - Matrix2::Identity()).norm() < kMatTol; }

bool is_orthogonal(const Matrix2r& t) {
    return (t * t.transpose() - Matrix2r::Identity()).norm() < kMatTol;
}

int det_sign(const Matrix2r& t) { return t.determinant() > 0.0 ? 1 : -1; }

SymmetryVerdict admit(bool antilinear, const Matrix2r& t) {
    SymmetryVerdict v;
    v.admissible = true;
    v.potential_sign = antilinear ? -1 : 1;
    v.field_sign = (antilinear ? -1 : 1) * det_sign(t);
    return v;
}

SymmetryVerdict reject(const std::string& why) {
    SymmetryVerdict v;
    v.reason = why;
    return v;
}

}  // namespace

Matrix2 sigma1() { return (Matrix2() << 0, 1, 1, 0).finished(); }
Matrix2 sigma2() { return (Matrix2() << 0, cplx(0, -1), cplx(0, 1), 0).finished(); }
Matrix2 sigma3() { return (Matrix2() << 1, 0, 0, -1).finished(); }

std::array<Matrix2, 3> rodrigues_conjugate(const Eigen::Vector3d& eta) {
    const std::array<Matrix2, 3> sig{sigma1(), sigma2(), sigma3()};
    const double n = eta.norm();
    if (n == 0.0) return sig;

    const double c = std::cos(2.0 * n);
    const double s = std::sin(2.0 * n);
    const Matrix2 eta_dot_sigma = eta(0) * sig[0] + eta(1) * sig[1] + eta(2) * sig[2];

    std::array<Matrix2, 3> out;
    for (int j = 0; j < 3; ++j) {
        Matrix2 cross = Matrix2::Zero();
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) {
                const int eps = (j == k || k == l || j == l)
                                    ? 0
                                    : (((k - j + 3) % 3 == 1) ? 1 : -1);  // epsilon_{jkl}
                if (eps != 0) cross += (double)eps * eta(k) * sig[l];
            }
        out[j] = c * sig[j] - (s / n) * cross + ((1.0 - c) / (n * n)) * eta(j) * eta_dot_sigma;
    }
    return out;
}

SymmetryVerdict classify_pauli(const Matrix2& S, const Matrix2r& T, bool antilinear) {
    if (!is_unitary(S)) throw domain_error("classify_pauli: S is not unitary");
    if (!is_orthogonal(T)) throw domain_error("classify_pauli: T is not orthogonal");
    const double want = (antilinear ? -1.0 : 1.0) * det_sign(T);
    const Matrix2 lhs = S * sigma3() * S.inverse();
    if ((lhs - want * sigma3()).norm() > kMatTol)
        return reject("S sigma3 S^-1 != (-1)^antilinear det(T) sigma3");
    return admit(antilinear, T);
}

SymmetryVerdict classify_dirac(const Matrix2& S, const Matrix2r& T, bool antilinear) {
    if (!is_unitary(S)) throw domain_error("classify_dirac: S is not unitary");
    if (!is_orthogonal(T)) throw domain_error("classify_dirac: T is not orthogonal");
    const std::array<Matrix2, 2> sig{sigma1(), sigma2()};
    const Matrix2 sinv = S.inverse();
    for (int h = 0; h < 2; ++h) {
        Matrix2 lhs = Matrix2::Zero();
        for (int j = 0; j < 2; ++j) {
            const Matrix2 sj = antilinear ? sig[j].conjugate() : sig[j];
            lhs += T(h, j) * (S * sj * sinv);
        }
        const Matrix2 rhs = (antilinear ? -1.0 : 1.0) * sig[h];
        if ((lhs - rhs).norm() > kMatTol)
            return reject("sigma-vector intertwining fails for the Dirac form");
    }
    return admit(antilinear, T);
}

bool beta_invariance(const FluxAlpha& flux, const Matrix4& beta, double eta3, double zeta,
                     double lambda) {
    if (!is_hermitian(beta)) throw domain_error("beta_invariance: beta must be Hermitian");
    const Matrix4 a = l_matrix(flux, lambda) + beta;
    const double tol = 1e-12 * std::max(1.0, a.cwiseAbs().maxCoeff());

    for (int li = 0; li < 2; ++li) {
        const int l = ChannelIndex::modes[li];
        for (int lj = 0; lj < 2; ++lj) {
            const int lp = ChannelIndex::modes[lj];
            const double dphi = zeta * (l - lp);
            const cplx same = std::exp(cplx(0.0, dphi)) - 1.0;
            const cplx updn = std::exp(cplx(0.0, 2.0 * eta3 + dphi)) - 1.0;
            const cplx dnup = std::exp(cplx(0.0, -2.0 * eta3 + dphi)) - 1.0;
            const auto at = [&](Spin s, Spin sp) {
                return a(ChannelIndex(s, l).flat(), ChannelIndex(sp, lp).flat());
            };
            if (std::abs(at(Spin::up, Spin::up) * same) > tol) return false;
            if (std::abs(at(Spin::down, Spin::down) * same) > tol) return false;
            if (std::abs(at(Spin::up, Spin::down) * updn) > tol) return false;
            if (std::abs(at(Spin::down, Spin::up) * dnup) > tol) return false;
        }
    }
    return true;
}

}  // namespace abp
