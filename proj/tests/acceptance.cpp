// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "abp/dirac.hpp"
#include "abp/resolvent.hpp"
#include "abp/scattering.hpp"
#include "abp/specfun.hpp"
#include "abp/symmetry.hpp"
#include "support/extrapolate.hpp"
#include "support/fd_residual.hpp"
#include "support/quadrature.hpp"

using namespace abp;

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
int g_failures = 0;

struct Criterion {
    const char* label;
    bool ok = true;
    double worst = 0.0;

    void require(bool cond, double measure = 0.0) {
        if (!cond) ok = false;
        worst = std::max(worst, measure);
    }

    void finish() const {
        std::printf("[%s] %s  (worst deviation %.3e)\n", ok ? "PASS" : "FAIL", label, worst);
        if (!ok) ++g_failures;
    }
};

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g((std::size_t)n);
    for (int i = 0; i < n; ++i) g[(std::size_t)i] = lo * std::pow(hi / lo, (double)i / (n - 1));
    return g;
}

Matrix4 seeded_hermitian(std::mt19937_64& rng, double scale = 1.0) {
    std::normal_distribution<double> n(0.0, scale);
    Matrix4 a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = cplx(n(rng), n(rng));
    return 0.5 * (a + Matrix4(a.adjoint()));
}

void criterion1() {
    Criterion c{"1 half-integer closed forms to 1e-12; K <-> H1 connection to 1e-9"};
    for (double x : log_grid(0.01, 30.0, 120)) {
        const double amp = std::sqrt(2.0 / (M_PI * x));
        const double j = specfun::bessel_j(0.5, x);
        const double i = specfun::bessel_i(0.5, x);
        const double k = specfun::bessel_k(0.5, x);
        const cplx h = specfun::hankel1(0.5, x);
        const double ej = std::abs(j - amp * std::sin(x)) / std::max(1e-300, amp);
        const double ei = std::abs(i - amp * std::sinh(x)) / (amp * std::sinh(x));
        const double ek =
            std::abs(k - std::sqrt(M_PI_2 / x) * std::exp(-x)) / (std::sqrt(M_PI_2 / x) * std::exp(-x));
        const double eh = std::abs(h - (-cplx(0, 1) * amp * std::exp(cplx(0, x)))) / amp;
        for (double e : {ej, ei, ek, eh}) c.require(e <= 1e-12, e);
    }
    for (double nu : {0.25, 0.5, 0.75, 1.25, 1.75}) {
        for (double x : log_grid(0.02, 100.0, 60)) {
            const cplx lhs = specfun::bessel_k(nu, cplx(0.0, -x));
            const cplx rhs = cplx(0.0, M_PI_2) * std::exp(cplx(0.0, nu * M_PI_2)) *
                             specfun::hankel1(nu, x);
            const double e1 = std::abs(lhs - rhs) / std::abs(rhs);
            const cplx lhs2 = specfun::bessel_k(nu, cplx(0.0, x));
            const cplx rhs2 = -cplx(0.0, M_PI_2) * std::exp(cplx(0.0, -nu * M_PI_2)) *
                              specfun::hankel2(nu, x);
            const double e2 = std::abs(lhs2 - rhs2) / std::abs(rhs2);
            c.require(e1 <= 1e-9, e1);
            c.require(e2 <= 1e-9, e2);
        }
    }
    c.finish();
}

void criterion2() {
    Criterion c{"2 defect norm quadrature vs closed form to 1e-8 on the 18-point grid"};
    for (double a : {0.25, 0.5, 0.75})
        for (int mode : {0, -1})
            for (double lam : {0.5, 1.0, 2.0}) {
                const FluxAlpha flux(a);
                auto f = [&](double r) {
                    const double g = std::abs(defect_g(flux, mode, lam, r, 0.0));
                    return kTwoPi * r * g * g;
                };
                const double got = testsupport::integrate_radial(f, 2.0 * lam, 1e-10);
                const double want = defect_norm_sq(flux, mode, lam);
                const double e = std::abs(got - want) / want;
                c.require(e <= 1e-8, e);
            }
    c.finish();
}

void criterion3() {
    Criterion c{"3 Weyl identity by quadrature at 10 random pairs to 1e-6; Lambda(-1) = 0"};
    std::mt19937_64 rng(420);
    std::uniform_real_distribution<double> mag(-1.0, 1.0), arg(0.2, kTwoPi - 0.2),
        al(0.1, 0.9);
    for (int it = 0; it < 10; ++it) {
        const FluxAlpha flux(al(rng));
        const SpectralPoint z(std::polar(std::pow(10.0, mag(rng)), arg(rng)));
        const SpectralPoint w(std::polar(std::pow(10.0, mag(rng)), arg(rng)));
        const Matrix4 diff = lambda_weyl(flux, z) - lambda_weyl(flux, w);
        for (int m = 0; m < 2; ++m) {
            const int mode = ChannelIndex::modes[m];
            const double nu = flux.order(mode);
            const cplx wz = z.minus_i_sqrt_z, ww = w.minus_i_sqrt_z;
            auto f = [&](double r) {
                return r * std::pow(wz, nu) * specfun::bessel_k(nu, wz * r) * std::pow(ww, nu) *
                       specfun::bessel_k(nu, ww * r);
            };
            const cplx gram = testsupport::integrate_radial(f, wz.real() + ww.real(), 1e-9);
            const int flat = ChannelIndex(Spin::up, mode).flat();
            const double e = std::abs(diff(flat, flat) - (w.z - z.z) * gram) /
                             std::max(1.0, std::abs(diff(flat, flat)));
            c.require(e <= 1e-6, e);
        }
    }
    for (double a : {0.25, 0.5, 0.75})
        c.require(lambda_weyl(FluxAlpha(a), SpectralPoint(cplx(-1.0, 0.0))).norm() == 0.0,
                  lambda_weyl(FluxAlpha(a), SpectralPoint(cplx(-1.0, 0.0))).norm());
    c.finish();
}

void criterion4() {
    Criterion c{"4 spectrum closed forms and the 4-dim zero-energy resonance space"};
    for (double a : {0.25, 0.5, 0.75}) {
        const auto recs =
            point_spectrum(FluxAlpha(a), ExtensionParam::theta(Matrix4::Zero()), 1e-8, 1e8, 1e-13);
        c.require(recs.size() == 1);
        if (!recs.empty()) {
            c.require(std::abs(recs[0].mu - 1.0) <= 1e-10, std::abs(recs[0].mu - 1.0));
            c.require(recs[0].multiplicity == 4);
        }
    }
    const FluxAlpha half(0.5);
    const auto neg = point_spectrum(half, ExtensionParam::theta(-M_PI_2 * Matrix4::Identity()),
                                    1e-8, 1e8, 1e-13);
    c.require(neg.size() == 1);
    if (!neg.empty()) {
        c.require(std::abs(neg[0].mu - 4.0) <= 1e-10, std::abs(neg[0].mu - 4.0));
        c.require(neg[0].multiplicity == 4);
    }
    const auto pos_ext = ExtensionParam::theta(M_PI_2 * Matrix4::Identity());
    c.require(point_spectrum(half, pos_ext, 1e-8, 1e8).empty());
    const auto res = zero_resonance(half, pos_ext);
    c.require(res.has_value() && res->charges.size() == 4);
    const Matrix4 m0 = theta_of(half, pos_ext) - conversion_shift(half) * Matrix4::Identity();
    Eigen::JacobiSVD<Matrix4> svd(m0);
    c.require(svd.singularValues()(0) <= 1e-12, svd.singularValues()(0));
    c.finish();
}

void criterion5() {
    Criterion c{"5 |f|^2 = dsigma at 50 random samples; dsigma(pi) = 1/(2 pi); Abel sum to 1e-4"};
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ur(0.0, 1.0);
    for (int it = 0; it < 50; ++it) {
        const FluxAlpha flux(0.03 + 0.94 * ur(rng));
        const double lam = std::pow(10.0, -2.0 + 4.0 * ur(rng));
        const double w = 0.05 + (kTwoPi - 0.1) * ur(rng);
        const double lhs = std::norm(friedrichs_amplitude(flux, lam, w));
        const double rhs = friedrichs_cross_section(flux, lam, w);
        const double e = std::abs(lhs - rhs) / rhs;
        c.require(e <= 1e-10, e);
    }
    const double ds = friedrichs_cross_section(FluxAlpha(0.5), 1.0, M_PI);
    c.require(std::abs(ds - 1.0 / kTwoPi) <= 1e-12, std::abs(ds - 1.0 / kTwoPi));

    // Abel-regularized partial-wave sum against the closed form at Delta = pi/2
    for (double a : {0.25, 0.5, 0.75}) {
        const double k = 1.3, u = M_PI_2 - M_PI;  // minus family reference direction
        const double eps_grid[3] = {0.1, 0.05, 0.025};
        cplx s_eps[3];
        for (int i = 0; i < 3; ++i) {
            const int L = (int)std::ceil(25.0 / eps_grid[i]);
            cplx s = 0.0;
            for (int ell = -L; ell <= L; ++ell) {
                const double nu = std::abs(ell + a);
                s += (std::exp(cplx(0.0, -M_PI * nu)) -
                      std::exp(cplx(0.0, -M_PI * std::abs((double)ell)))) *
                     std::exp(cplx(0.0, ell * u)) * std::exp(-eps_grid[i] * std::abs((double)ell));
            }
            s_eps[i] = s;
        }
        cplx p01 = (eps_grid[0] * s_eps[1] - eps_grid[1] * s_eps[0]) / (eps_grid[0] - eps_grid[1]);
        cplx p12 = (eps_grid[1] * s_eps[2] - eps_grid[2] * s_eps[1]) / (eps_grid[1] - eps_grid[2]);
        cplx abel = (eps_grid[0] * p12 - eps_grid[2] * p01) / (eps_grid[0] - eps_grid[2]);
        abel *= kTwoPi * std::exp(cplx(0.0, -M_PI_4)) / (std::pow(kTwoPi, 1.5) * std::sqrt(k));
        const cplx closed = friedrichs_amplitude(FluxAlpha(a), k * k, M_PI_2);
        const double e = std::abs(abel - closed) / std::abs(closed);
        c.require(e <= 1e-4, e);
    }
    c.finish();
}

void criterion6() {
    Criterion c{"6 eigenfunction residuals < 1e-4; far field matches theta_amplitude to 1e-3"};
    const auto ext = ExtensionParam::theta(M_PI_2 * Matrix4::Identity());
    for (double a : {0.25, 0.5, 0.75}) {
        const FluxAlpha flux(a);
        const WaveVector kv(1.1, 0.4);
        auto fried = [&](double r, double th) {
            return friedrichs_eigenfunction(flux, Spin::up, kv, Side::plus, PolarPoint(r, th),
                                            1e-12)(0);
        };
        auto theta_f = [&](double r, double th) {
            return theta_eigenfunction(flux, ext, Spin::up, kv, Side::minus, PolarPoint(r, th),
                                       1e-12)(0);
        };
        for (double r : {0.5, 1.0, 1.8, 3.0}) {
            const double e1 =
                testsupport::pauli_fd_relative_residual(fried, a, kv.energy(), r, 1.7);
            const double e2 =
                testsupport::pauli_fd_relative_residual(theta_f, a, kv.energy(), r, 1.7);
            c.require(e1 <= 1e-4, e1);
            c.require(e2 <= 1e-4, e2);
        }

        const auto krein = ExtensionParam::theta(Matrix4::Zero());
        const auto recs = point_spectrum(flux, krein, 1e-4, 1e4);
        if (recs.size() == 1) {
            Charge4 q = Charge4::Zero();
            q(1) = 1.0;
            auto bound = [&](double r, double th) {
                return bound_state(flux, krein, recs[0], q, PolarPoint(r, th))(0);
            };
            for (double r : {0.5, 1.5, 3.0}) {
                const double e =
                    testsupport::pauli_fd_relative_residual(bound, a, cplx(-recs[0].mu, 0.0), r, 0.6);
                c.require(e <= 1e-4, e);
            }
        } else {
            c.require(false);
        }
    }

    // far field of the extension correction at phase-locked radii {50,100,200}
    const double k = M_PI / 5.0;
    const WaveVector kv(k, 0.7);
    const double theta_dir = 2.3;
    for (double a : {0.3, 0.5}) {
        const FluxAlpha flux(a);
        for (Side side : {Side::plus, Side::minus}) {
            const cplx want =
                theta_amplitude(flux, ext, kv, side, Spin::up, Spin::up, theta_dir) -
                theta_amplitude(flux, ExtensionParam::friedrichs(), kv, side, Spin::up, Spin::up,
                                theta_dir);
            std::vector<double> nodes;
            std::vector<cplx> vals;
            for (double r : {50.0, 100.0, 200.0}) {
                const PolarPoint x(r, theta_dir);
                const cplx corr = (theta_eigenfunction(flux, ext, Spin::up, kv, side, x, 1e-13) -
                                   friedrichs_eigenfunction(flux, Spin::up, kv, side, x, 1e-13))(0);
                nodes.push_back(r);
                vals.push_back(corr * std::sqrt(r));
            }
            const cplx lim = testsupport::power_extrapolate(nodes, vals, {-1.0, -2.0});
            const double e = std::abs(lim - want) / std::abs(want);
            c.require(e <= 1e-3, e);
        }
    }
    c.finish();
}

void criterion7() {
    Criterion c{"7 singular value floor of Lambda_pm + Theta over 20 seeded Hermitian Theta"};
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> al(0.08, 0.92);
    for (int it = 0; it < 20; ++it) {
        const FluxAlpha flux(al(rng));
        const Matrix4 theta = seeded_hermitian(rng, 1.0 + it % 5);
        for (double lam : log_grid(1e-3, 1e3, 200)) {
            const double floor =
                M_PI_2 * std::min(std::pow(lam, flux.alpha), std::pow(lam, 1.0 - flux.alpha));
            for (Side s : {Side::plus, Side::minus}) {
                const double sv = sigma_min_lambda_pm(flux, theta, lam, s);
                c.require(sv >= floor * (1.0 - 1e-12), (floor - sv) / floor);
            }
        }
        c.require(
            exceptional_points(flux, ExtensionParam::theta(theta), 1e-3, 1e3, 200).empty());
    }
    c.finish();
}

void criterion8() {
    Criterion c{"8 symmetry suite: diagonality criterion, named examples, Dirac rotation lock"};
    std::mt19937_64 rng(88);
    std::normal_distribution<double> n;
    const FluxAlpha flux(0.45);
    for (int it = 0; it < 30; ++it) {
        Matrix4 b;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) b(i, j) = cplx(n(rng), n(rng));
        b = 0.5 * (b + Matrix4(b.adjoint()));
        if (it % 2 == 0) b = Matrix4(b.diagonal().asDiagonal());
        bool all = true;
        for (int i = 0; i < 20 && all; ++i)
            for (int j = 0; j < 20 && all; ++j)
                all = beta_invariance(flux, b, kTwoPi * i / 20.0, kTwoPi * j / 20.0, 1.1);
        const bool diag = (b - Matrix4(b.diagonal().asDiagonal())).cwiseAbs().maxCoeff() < 1e-12;
        c.require(all == diag);
    }

    Matrix2r mrot;
    mrot << -1, 0, 0, -1;
    const auto kramers = classify_pauli(sigma2(), mrot, true);
    c.require(kramers.admissible && kramers.potential_sign == -1 && kramers.field_sign == -1);
    const auto flip = classify_pauli(sigma1(), Matrix2r::Identity(), true);
    c.require(flip.admissible && flip.potential_sign == -1 && flip.field_sign == -1);
    Matrix2r par;
    par << -1, 0, 0, 1;
    const auto cp = classify_pauli(Matrix2::Identity(), par, true);
    c.require(cp.admissible && cp.field_sign == 1);

    for (int i = 0; i < 24; ++i) {
        const double eta3 = kTwoPi * i / 24.0 + 0.03;
        Matrix2 s = Matrix2::Zero();
        s(0, 0) = std::exp(cplx(0.0, -eta3));
        s(1, 1) = std::exp(cplx(0.0, eta3));
        Matrix2r rot_match, rot_off;
        rot_match << std::cos(2 * eta3), -std::sin(2 * eta3), std::sin(2 * eta3),
            std::cos(2 * eta3);
        rot_off << std::cos(2 * eta3 + 0.15), -std::sin(2 * eta3 + 0.15),
            std::sin(2 * eta3 + 0.15), std::cos(2 * eta3 + 0.15);
        c.require(classify_dirac(s, rot_match, false).admissible);
        c.require(!classify_dirac(s, rot_off, false).admissible);
        Matrix2r refl;
        refl << std::cos(eta3), std::sin(eta3), std::sin(eta3), -std::cos(eta3);
        c.require(!classify_dirac(s, refl, false).admissible);
    }
    c.finish();
}

void criterion9() {
    Criterion c{"9 Dirac charge determinant over the gamma grid; traces closed vs numeric 1e-7"};
    for (int i = 1; i < 21; ++i) {
        const double g = M_PI * i / 21.0;
        const auto sys = dirac_square_charges(g);
        const double e = std::abs(sys.determinant - cplx(0.0, 2.0 / std::sin(g)));
        c.require(!sys.pole && sys.only_trivial && e <= 1e-12 / std::sin(g), e);
    }
    c.require(dirac_square_charges(0.0).pole && dirac_square_charges(0.0).only_trivial);
    c.require(dirac_square_charges(M_PI).pole && dirac_square_charges(M_PI).only_trivial);

    for (double a : {0.25, 0.5, 0.75}) {
        const FluxAlpha flux(a);
        const cplx mu(1.1, -0.3);
        const double gamma = 1.9;
        const auto closed = dirac_traces(flux, mu, gamma);
        const cplx eig = std::exp(cplx(0.0, gamma));
        auto psi = [&](double r, double th) -> Spinor {
            return mu * (dirac_defect_xi(flux, Side::plus, r, th) +
                         eig * dirac_defect_xi(flux, Side::minus, r, th));
        };
        auto avg = [&](double r, int slot, int phase) {
            const int N = 16;
            cplx acc = 0.0;
            for (int i2 = 0; i2 < N; ++i2) {
                const double th = kTwoPi * i2 / N;
                acc += psi(r, th)(slot) * std::exp(cplx(0.0, phase * th));
            }
            return acc / (double)N;
        };
        const std::vector<double> nodes{1e-3, 1e-4, 1e-5};
        auto extrap = [&](int slot, int phase, double power, double corr) {
            std::vector<cplx> vals;
            for (double r : nodes) vals.push_back(std::pow(r, power) * avg(r, slot, phase));
            return testsupport::power_extrapolate(nodes, vals, {corr, 2.0});
        };
        const cplx up = extrap(0, 1, 1.0 - a, 2.0 - 2.0 * a);
        const cplx dn = extrap(1, 0, a, 2.0 * a);
        const double e1 = std::abs(up - closed.c_up_alpha_m1) / std::abs(closed.c_up_alpha_m1);
        const double e2 =
            std::abs(dn - closed.c_down_minus_alpha) / std::abs(closed.c_down_minus_alpha);
        c.require(e1 <= 1e-7, e1);
        c.require(e2 <= 1e-7, e2);
    }
    c.finish();
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (g_failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d criterion(s) FAILED\n", g_failures);
    return g_failures;
}
