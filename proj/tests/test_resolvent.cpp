#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "abp/resolvent.hpp"
#include "abp/specfun.hpp"
#include "support/fd_residual.hpp"
#include "support/quadrature.hpp"

using namespace abp;

namespace {

Matrix4 random_hermitian(std::mt19937_64& rng, double scale = 1.0) {
    std::normal_distribution<double> n(0.0, scale);
    Matrix4 a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = cplx(n(rng), n(rng));
    return 0.5 * (a + Matrix4(a.adjoint()));
}

}  // namespace

TEST_CASE("friedrichs_kernel: symmetry, decay, guards") {
    const FluxAlpha half(0.5);

    // ell = 0 summand at coincident unit radii matches sinh(1) e^{-1} / (2 pi)
    const double term0 = specfun::bessel_i(0.5, 1.0) * specfun::bessel_k(0.5, 1.0) / (2.0 * M_PI);
    CHECK(term0 == doctest::Approx(std::sinh(1.0) * std::exp(-1.0) / (2.0 * M_PI)).epsilon(1e-12));

    const SpectralPoint zm2(cplx(-2.0, 0.0));
    const PolarPoint x(1.3, 0.4), xp(0.6, 2.1);
    const KernelValue k1 = friedrichs_kernel(half, zm2, x, xp);
    const KernelValue k2 = friedrichs_kernel(half, zm2, xp, x);
    CHECK((k1 - KernelValue(k2.adjoint())).norm() < 1e-12 * k1.norm());
    CHECK(k1(0, 1) == cplx(0.0, 0.0));
    CHECK(k1(1, 0) == cplx(0.0, 0.0));
    CHECK(k1(0, 0) == k1(1, 1));

    const KernelValue far =
        friedrichs_kernel(half, SpectralPoint(cplx(-1.0, 0.0)), PolarPoint(1.0, 0.0),
                          PolarPoint(10.0, 0.0));
    CHECK(std::abs(far(0, 0)) < 1e-4);

    CHECK_THROWS_AS(friedrichs_kernel(half, zm2, PolarPoint(1.0, 0.1), PolarPoint(1.0, 0.1)),
                    numerical_error);
    CHECK_THROWS_AS(friedrichs_kernel(half, zm2, PolarPoint(0.0, 0.0), PolarPoint(1.0, 0.0)),
                    domain_error);
}

TEST_CASE("friedrichs_kernel against a brute-force angular sum") {
    // direct fixed-length sum as an independent route
    for (double a : {0.3, 0.5, 0.71}) {
        const FluxAlpha flux(a);
        const SpectralPoint z(cplx(0.7, 1.9));
        const PolarPoint x(0.8, 1.1), xp(1.9, 5.7);
        const cplx w = z.minus_i_sqrt_z;
        cplx brute = 0.0;
        for (int ell = -60; ell <= 60; ++ell) {
            const double nu = std::abs(ell + a);
            brute += specfun::bessel_i(nu, w * 0.8) * specfun::bessel_k(nu, w * 1.9) *
                     std::exp(cplx(0.0, ell * (x.theta - xp.theta))) / (2.0 * M_PI);
        }
        const KernelValue got = friedrichs_kernel(flux, z, x, xp, 1e-12);
        CHECK(std::abs(got(0, 0) - brute) <= 1e-11 * std::max(1.0, std::abs(brute)));
    }
}

TEST_CASE("single_layer: defect value, linearity") {
    const FluxAlpha half(0.5);
    const SpectralPoint zm1(cplx(-1.0, 0.0));
    Charge4 q = Charge4::Zero();
    q(0) = 1.0;  // (up, 0)
    const Spinor v = single_layer(half, zm1, q, PolarPoint(1.0, 0.0));
    CHECK(std::abs(v(0) - defect_g(half, 0, 1.0, 1.0, 0.0)) < 1e-14);
    CHECK(v(1) == cplx(0.0, 0.0));

    CHECK(single_layer(half, zm1, Charge4::Zero(), PolarPoint(1.0, 0.0)).norm() == 0.0);

    std::mt19937_64 rng(31);
    std::normal_distribution<double> n;
    for (int it = 0; it < 10; ++it) {
        Charge4 q1, q2;
        for (int i = 0; i < 4; ++i) {
            q1(i) = cplx(n(rng), n(rng));
            q2(i) = cplx(n(rng), n(rng));
        }
        const PolarPoint x(0.5 + it * 0.3, 0.7 * it);
        const Spinor sum = single_layer(half, zm1, q1 + q2, x);
        const Spinor parts = single_layer(half, zm1, q1, x) + single_layer(half, zm1, q2, x);
        CHECK((sum - parts).norm() < 1e-13 * std::max(1.0, parts.norm()));
    }
}

TEST_CASE("krein kernel: correction value, friedrichs passthrough, singular z") {
    const FluxAlpha half(0.5);
    const SpectralPoint zm1(cplx(-1.0, 0.0));
    const auto theta_ext = ExtensionParam::theta(M_PI_2 * Matrix4::Identity());

    const KernelValue corr =
        krein_correction(half, theta_ext, zm1, PolarPoint(1.0, 0.0), PolarPoint(1.0, 0.0));
    const double g = 0.18393972058572116;
    CHECK(corr(0, 0).real() == doctest::Approx(2.0 * g * g * 2.0 / M_PI).epsilon(1e-10));
    CHECK(std::abs(corr(0, 0).imag()) < 1e-15);
    CHECK(corr(0, 1) == cplx(0.0, 0.0));

    const PolarPoint x(1.2, 0.3), xp(0.7, 1.9);
    const auto fr = ExtensionParam::friedrichs();
    CHECK((krein_kernel(half, fr, zm1, x, xp) - friedrichs_kernel(half, zm1, x, xp)).norm() ==
          0.0);

    const auto krein = ExtensionParam::theta(Matrix4::Zero());
    CHECK_THROWS_AS(krein_kernel(half, krein, zm1, x, xp), numerical_error);
}

TEST_CASE("krein kernel: self-adjointness across conjugate spectral points") {
    std::mt19937_64 rng(17);
    const FluxAlpha flux(0.37);
    const auto ext = ExtensionParam::theta(random_hermitian(rng));
    const cplx z(0.83, 1.21);
    const PolarPoint x(1.4, 2.2), xp(0.5, 4.0);
    const KernelValue a = krein_kernel(flux, ext, SpectralPoint(z), x, xp, 1e-12);
    const KernelValue b = krein_kernel(flux, ext, SpectralPoint(std::conj(z)), xp, x, 1e-12);
    CHECK((a - KernelValue(b.adjoint())).norm() <= 1e-10 * a.norm());
}

TEST_CASE("point_spectrum closed forms") {
    for (double a : {0.25, 0.5, 0.75}) {
        const FluxAlpha flux(a);
        const auto krein = ExtensionParam::theta(Matrix4::Zero());
        const auto recs = point_spectrum(flux, krein, 1e-8, 1e8);
        REQUIRE(recs.size() == 1);
        CHECK(std::abs(recs[0].mu - 1.0) <= 1e-10);
        CHECK(recs[0].multiplicity == 4);
        for (const auto& q : recs[0].kernel_basis) CHECK(q.norm() == doctest::Approx(1.0));
    }

    const FluxAlpha half(0.5);
    const auto neg = ExtensionParam::theta(-M_PI_2 * Matrix4::Identity());
    const auto recs = point_spectrum(half, neg, 1e-8, 1e8);
    REQUIRE(recs.size() == 1);
    CHECK(std::abs(recs[0].mu - 4.0) <= 4e-10);
    CHECK(recs[0].multiplicity == 4);

    const auto pos = ExtensionParam::theta(M_PI_2 * Matrix4::Identity());
    CHECK(point_spectrum(half, pos, 1e-8, 1e8).empty());
    CHECK(point_spectrum(half, ExtensionParam::friedrichs(), 1e-8, 1e8).empty());
    CHECK_THROWS_AS(point_spectrum(half, pos, -1.0, 1.0), domain_error);
}

TEST_CASE("point_spectrum: eigenvalue motion under Theta = t Id at alpha = 1/2") {
    const FluxAlpha half(0.5);
    for (double t : {-2.0, -1.0, 0.0, 1.0}) {
        const auto ext = ExtensionParam::theta(t * Matrix4::Identity());
        const auto recs = point_spectrum(half, ext, 1e-8, 1e8);
        const double want = std::pow(1.0 - 2.0 * t / M_PI, 2);
        REQUIRE(recs.size() == 1);
        CHECK(recs[0].multiplicity == 4);
        CHECK(std::abs(recs[0].mu - want) <= 1e-9 * want);
    }
    // theta >= pi/2 pushes the root out of the spectrum
    CHECK(point_spectrum(half, ExtensionParam::theta(M_PI_2 * Matrix4::Identity()), 1e-8, 1e8)
              .empty());
}

TEST_CASE("bound states: value, norm, orthogonality, radial equation") {
    const FluxAlpha half(0.5);
    const auto krein = ExtensionParam::theta(Matrix4::Zero());
    const auto recs = point_spectrum(half, krein, 1e-6, 1e6);
    REQUIRE(recs.size() == 1);
    const auto& rec = recs[0];

    Charge4 e0 = Charge4::Zero();
    e0(0) = 1.0;
    // ||psi||^2 = pi/4 for the unit (up,0) charge at mu = 1
    auto f = [&](double r) {
        return 2.0 * M_PI * r * std::norm(bound_state(half, krein, rec, e0, PolarPoint(r, 0.0))(0));
    };
    CHECK(std::abs(testsupport::integrate_radial(f, 2.0, 1e-9) - M_PI / 4.0) < 1e-7);

    // distinct channels are orthogonal: angular integral vanishes
    Charge4 e1 = Charge4::Zero();
    e1(1) = 1.0;
    cplx overlap = 0.0;
    const int nth = 32;
    for (int i = 0; i < nth; ++i) {
        const double th = 2.0 * M_PI * i / nth;
        const Spinor a = bound_state(half, krein, rec, e0, PolarPoint(1.0, th));
        const Spinor b = bound_state(half, krein, rec, e1, PolarPoint(1.0, th));
        overlap += std::conj(a(0)) * b(0) + std::conj(a(1)) * b(1);
    }
    CHECK(std::abs(overlap) / nth < 1e-14);

    // profile solves the radial equation with eigenvalue -mu
    auto psi = [&](double r, double th) {
        return bound_state(half, krein, rec, e0, PolarPoint(r, th))(0);
    };
    for (double r : {0.1, 0.5, 1.0, 2.5, 5.0})
        CHECK(testsupport::pauli_fd_relative_residual(psi, half.alpha, cplx(-rec.mu, 0.0), r,
                                                      0.3) <= 1e-4);

    Charge4 bad = Charge4::Zero();
    bad(0) = 1.0;
    const auto other = ExtensionParam::theta(-M_PI_2 * Matrix4::Identity());
    const auto recs4 = point_spectrum(half, other, 1e-6, 1e6);
    EigenvalueRecord wrong = recs4[0];
    wrong.mu = 2.0;  // not a root: residual check must reject the charge
    CHECK_THROWS_AS(bound_state(half, other, wrong, bad, PolarPoint(1.0, 0.0)), domain_error);
}

TEST_CASE("defect equation residual for the single layer profile") {
    for (double a : {0.25, 0.6}) {
        const FluxAlpha flux(a);
        for (double lam : {0.7, 1.5}) {
            auto g = [&](double r, double th) { return defect_g(flux, 0, lam, r, th); };
            for (double r : {0.3, 1.0, 2.0})
                CHECK(testsupport::pauli_fd_relative_residual(
                          g, flux.alpha, cplx(-lam * lam, 0.0), r, 1.0) <= 1e-4);
        }
    }
}

TEST_CASE("zero_resonance: existence exactly when Lambda(0) + Theta is singular") {
    const FluxAlpha half(0.5);
    CHECK(!zero_resonance(half, ExtensionParam::friedrichs()).has_value());
    CHECK(!zero_resonance(half, ExtensionParam::theta(Matrix4::Zero())).has_value());

    const auto res = zero_resonance(half, ExtensionParam::theta(M_PI_2 * Matrix4::Identity()));
    REQUIRE(res.has_value());
    CHECK(res->charges.size() == 4);

    // profiles scale like r^{-1/2} at alpha = 1/2
    const Charge4 q = res->charges[0];
    const Spinor p1 = resonance_profile(half, q, PolarPoint(1.0, 0.7));
    const Spinor p2 = resonance_profile(half, q, PolarPoint(2.0, 0.7));
    CHECK(p2.norm() / p1.norm() == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-12));

    // beta formulation: resonances iff det beta = 0
    std::mt19937_64 rng(4);
    Matrix4 b = random_hermitian(rng);
    b.col(3) = b.col(0);
    b.row(3) = b.row(0);  // rank deficient Hermitian
    const auto res_b = zero_resonance(half, ExtensionParam::beta(b));
    CHECK(res_b.has_value());
}

TEST_CASE("exceptional points: empty for Hermitian Theta; singular value floor") {
    const FluxAlpha half(0.5);
    Matrix4 d = Matrix4::Zero();
    d.diagonal() << 0.7, -1.3, 2.0, 0.0;
    CHECK(exceptional_points(half, ExtensionParam::theta(d), 1e-3, 1e3, 400).empty());

    std::mt19937_64 rng(12);
    const FluxAlpha f3(0.3);
    const Matrix4 t = random_hermitian(rng, 2.0);
    CHECK(exceptional_points(f3, ExtensionParam::theta(t), 1e-3, 1e3, 400).empty());

    for (int i = 0; i < 100; ++i) {
        const double lam = 1e-3 * std::pow(1e6, i / 99.0);
        const double floor =
            M_PI_2 * std::min(std::pow(lam, f3.alpha), std::pow(lam, 1.0 - f3.alpha));
        for (Side s : {Side::plus, Side::minus})
            CHECK(sigma_min_lambda_pm(f3, t, lam, s) >= floor * (1.0 - 1e-12));
    }
    CHECK_THROWS_AS(exceptional_points(half, ExtensionParam::friedrichs(), 1.0, 2.0, 10),
                    domain_error);
}
