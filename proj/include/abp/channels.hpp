#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "abp/errors.hpp"

namespace abp {

using cplx = std::complex<double>;
using Charge4 = Eigen::Vector4cd;
using Matrix4 = Eigen::Matrix4cd;
using Spinor = Eigen::Vector2cd;

enum class Spin { up, down };

// Flat channel ordering used everywhere (matrices, JSON, CSV):
// (up,0) -> 0, (up,-1) -> 1, (down,0) -> 2, (down,-1) -> 3.
struct ChannelIndex {
    Spin spin;
    int mode;  // 0 or -1

    ChannelIndex(Spin s, int ell) : spin(s), mode(ell) {
        if (ell != 0 && ell != -1) throw domain_error("ChannelIndex: mode must be 0 or -1");
    }

    int flat() const { return (spin == Spin::up ? 0 : 2) + (mode == 0 ? 0 : 1); }

    static ChannelIndex from_flat(int i) {
        if (i < 0 || i > 3) throw domain_error("ChannelIndex: flat index out of range");
        return {i < 2 ? Spin::up : Spin::down, i % 2 == 0 ? 0 : -1};
    }

    static constexpr std::array<int, 2> modes{0, -1};
};

// Reduced Aharonov-Bohm flux alpha in (0,1) and the channel orders it
// induces: nu0 = alpha for mode 0, nu1 = 1 - alpha for mode -1.
struct FluxAlpha {
    double alpha;
    double nu0;
    double nu1;

    explicit FluxAlpha(double a) : alpha(a), nu0(a), nu1(1.0 - a) {
        if (!(a > 1e-6 && a < 1.0 - 1e-6))
            throw domain_error("FluxAlpha: alpha must lie in [1e-6, 1-1e-6]");
    }

    double order(int ell) const {
        if (ell == 0) return nu0;
        if (ell == -1) return nu1;
        return std::abs(ell + alpha);
    }

    double order_flat(int i) const { return (i % 2 == 0) ? nu0 : nu1; }
};

// z off [0, infinity) together with -i sqrt(z) under the Im sqrt(z) > 0
// branch, which every kernel consumes.
struct SpectralPoint {
    cplx z;
    cplx minus_i_sqrt_z;  // Re > 0

    explicit SpectralPoint(cplx zz) : z(zz) {
        if (zz.imag() == 0.0 && zz.real() >= 0.0)
            throw domain_error("SpectralPoint: z must avoid [0, infinity)");
        cplx root = std::sqrt(zz);
        if (root.imag() < 0.0) root = -root;
        minus_i_sqrt_z = cplx(0.0, -1.0) * root;
    }
};

inline bool is_hermitian(const Matrix4& m, double tol = 1e-12) {
    const double scale = std::max(1.0, m.norm());
    return (m - m.adjoint()).norm() <= tol * scale;
}

// Extension descriptor: Friedrichs (formal Theta = infinity), a finite
// Theta, or a beta still to be converted.
class ExtensionParam {
public:
    enum class Kind { friedrichs, theta, beta };

    static ExtensionParam friedrichs() { return ExtensionParam(Kind::friedrichs, Matrix4::Zero()); }

    static ExtensionParam theta(const Matrix4& m) {
        require_herm(m, "theta");
        return ExtensionParam(Kind::theta, m);
    }

    static ExtensionParam beta(const Matrix4& m) {
        require_herm(m, "beta");
        return ExtensionParam(Kind::beta, m);
    }

    Kind kind() const { return kind_; }
    bool is_friedrichs() const { return kind_ == Kind::friedrichs; }

    const Matrix4& matrix() const {
        if (kind_ == Kind::friedrichs)
            throw domain_error("ExtensionParam: Friedrichs carries no matrix");
        return m_;
    }

private:
    ExtensionParam(Kind k, const Matrix4& m) : kind_(k), m_(m) {}

    static void require_herm(const Matrix4& m, const char* which) {
        if (!is_hermitian(m))
            throw domain_error(std::string("ExtensionParam: ") + which + " matrix not Hermitian");
    }

    Kind kind_;
    Matrix4 m_;
};

}  // namespace abp
