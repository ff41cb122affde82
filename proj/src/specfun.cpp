#include "abp/specfun.hpp"

#include <quadmath.h>

#include <cmath>
#include <cstdlib>

#include "abp/errors.hpp"

namespace abp::specfun {

namespace {

// Everything below |z| = kSplit is summed as an ascending series in
// __float128; the reflection formula for K then loses at most
// ~e^{2|z|} * 2^-113 which stays under 1e-15 at the boundary. Beyond the
// split the large-argument expansions have their smallest term near
// e^{-2|z|}, so both sides meet in the middle with headroom.
constexpr double kSplit = 18.0;
constexpr double kOrderGuard = 1e-6;
constexpr double kOverflowRe = 700.0;
constexpr int kMaxSeriesTerms = 600;
constexpr int kMaxAsymTerms = 40;

struct qc {
    __float128 re = 0, im = 0;
};

qc operator+(qc a, qc b) { return {a.re + b.re, a.im + b.im}; }
qc operator-(qc a, qc b) { return {a.re - b.re, a.im - b.im}; }
qc operator*(qc a, qc b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
qc operator*(__float128 s, qc a) { return {s * a.re, s * a.im}; }

qc qdiv(qc a, qc b) {
    const __float128 d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

__float128 qabs(qc a) { return hypotq(a.re, a.im); }

qc qlog(qc a) { return {0.5q * logq(a.re * a.re + a.im * a.im), atan2q(a.im, a.re)}; }

qc qexp(qc a) {
    const __float128 m = expq(a.re);
    return {m * cosq(a.im), m * sinq(a.im)};
}

// z^p for real p, principal branch (arguments stay off the negative axis).
qc qpow(qc z, double p) { return qexp((__float128)p * qlog(z)); }

cplx to_cplx(qc a) { return {(double)a.re, (double)a.im}; }

// Ascending series for I_nu; also used with nu < 0 by the K reflection.
// The order guard upstream keeps k + nu away from zero.
qc series_i(double nu, qc z) {
    const qc q = 0.5q * z;
    const qc q2 = q * q;
    qc term{1, 0}, sum{1, 0};
    for (int k = 1; k < kMaxSeriesTerms; ++k) {
        term = qdiv(term * q2, qc{(__float128)k * ((__float128)k + (__float128)nu), 0});
        sum = sum + term;
        if (qabs(term) <= 1e-38q * qabs(sum)) break;
    }
    const qc pref = qdiv(qpow(q, nu), qc{tgammaq(1 + (__float128)nu), 0});
    return pref * sum;
}

qc series_k(double nu, qc z) {
    const qc diff = series_i(-nu, z) - series_i(nu, z);
    const __float128 c = M_PIq / (2 * sinq((__float128)nu * M_PIq));
    return c * diff;
}

__float128 series_j(double nu, __float128 x) {
    const __float128 q = 0.5q * x;
    const __float128 mq2 = -q * q;
    __float128 term = 1, sum = 1;
    for (int k = 1; k < kMaxSeriesTerms; ++k) {
        term *= mq2 / ((__float128)k * ((__float128)k + (__float128)nu));
        sum += term;
        if (fabsq(term) <= 1e-38q * (fabsq(sum) + 1e-30q)) break;
    }
    return powq(q, (__float128)nu) / tgammaq(1 + (__float128)nu) * sum;
}

__float128 series_y(double nu, __float128 x) {
    const __float128 pn = (__float128)nu * M_PIq;
    return (series_j(nu, x) * cosq(pn) - series_j(-nu, x)) / sinq(pn);
}

// Large-argument expansions; a_k(nu) = prod (4nu^2 - (2j-1)^2) / (8^k k!).
cplx asym_k(double nu, cplx z) {
    const double mu = 4.0 * nu * nu;
    cplx term = 1.0, sum = 1.0;
    double prev = 1e300;
    for (int k = 1; k < kMaxAsymTerms; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (8.0 * k) / z;
        if (std::abs(term) >= prev) break;
        sum += term;
        prev = std::abs(term);
        if (prev <= 1e-19 * std::abs(sum)) break;
    }
    return std::sqrt(M_PI / (2.0 * z)) * std::exp(-z) * sum;
}

cplx asym_i(double nu, cplx z) {
    const double mu = 4.0 * nu * nu;
    cplx tp = 1.0, sp = 1.0;  // alternating series, grows with e^z
    cplx tm = 1.0, sm = 1.0;  // plain series, multiplies e^{-z}
    double prev = 1e300;
    for (int k = 1; k < kMaxAsymTerms; ++k) {
        const double odd = 2.0 * k - 1.0;
        const cplx f = (mu - odd * odd) / (8.0 * k) / z;
        tp *= -f;
        tm *= f;
        if (std::abs(tp) >= prev) break;
        sp += tp;
        sm += tm;
        prev = std::abs(tp);
        if (prev <= 1e-19 * std::abs(sp)) break;
    }
    // Second (recessive) exponential: sign of the phase follows the half
    // plane so the expansion stays valid across the imaginary axis.
    const double sgn = (z.imag() >= 0.0) ? 1.0 : -1.0;
    const cplx phase = std::exp(cplx(0.0, sgn * (nu + 0.5) * M_PI));
    const cplx front = 1.0 / std::sqrt(2.0 * M_PI * z);
    return front * (std::exp(z) * sp + phase * std::exp(-z) * sm);
}

cplx asym_h1(double nu, double x) {
    const double mu = 4.0 * nu * nu;
    cplx term = 1.0, sum = 1.0;
    double prev = 1e300;
    for (int k = 1; k < kMaxAsymTerms; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= cplx(0.0, (mu - odd * odd) / (8.0 * k * x));
        if (std::abs(term) >= prev) break;
        sum += term;
        prev = std::abs(term);
        if (prev <= 1e-19 * std::abs(sum)) break;
    }
    const long double w = (long double)x - (long double)nu * M_PIl / 2.0l - M_PIl / 4.0l;
    const cplx eiw((double)cosl(w), (double)sinl(w));
    return std::sqrt(2.0 / (M_PI * x)) * eiw * sum;
}

void require_order_positive(double nu, const char* op) {
    if (!(nu > 0.0)) throw domain_error(std::string(op) + ": order must be positive");
}

void require_order_noninteger(double nu, const char* op) {
    if (std::abs(nu - std::round(nu)) < kOrderGuard)
        throw domain_error(std::string(op) +
                           ": order within 1e-6 of an integer (reflection formula breaks down)");
}

// Base-order evaluations (nu <= ~3.5) behind the ladders: ascending series
// below the split, large-argument expansion above. The expansion's
// a_k(nu) coefficients blow up once nu approaches sqrt(|z|), which is
// exactly what the ladders are for.
cplx base_i(double nu, cplx z) {
    if (std::abs(z) <= kSplit) return to_cplx(series_i(nu, qc{z.real(), z.imag()}));
    return asym_i(nu, z);
}

cplx base_k(double nu, cplx z) {
    if (std::abs(z) <= kSplit) return to_cplx(series_k(nu, qc{z.real(), z.imag()}));
    return asym_k(nu, z);
}

double base_j(double nu, double x) {
    if (x <= kSplit) return (double)series_j(nu, (__float128)x);
    return asym_h1(nu, x).real();
}

}  // namespace

double gamma(double x) {
    if (x <= 0.0 && x == std::round(x))
        throw domain_error("gamma: pole at non-positive integer argument");
    return std::tgamma(x);
}

double bessel_j(double nu, double x) {
    if (nu < 0.0) throw domain_error("bessel_j: order must be non-negative");
    if (x < 0.0) throw domain_error("bessel_j: argument must be non-negative");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    if (x <= kSplit) return (double)series_j(nu, (__float128)x);
    if (nu <= 2.0) return asym_h1(nu, x).real();
    const double mu = nu - std::floor(nu);
    const int m = (int)std::floor(nu);
    return bessel_j_ladder(mu, x, m + 1)[m];
}

std::vector<double> bessel_j_ladder(double mu, double x, int count) {
    if (count < 1) return {};
    if (mu < 0.0 || mu > 2.0) throw domain_error("bessel_j_ladder: base order outside [0, 2]");
    if (x < 0.0) throw domain_error("bessel_j_ladder: argument must be non-negative");
    std::vector<double> out((std::size_t)count);
    if (x == 0.0) {
        for (int m = 0; m < count; ++m) out[m] = (mu + m == 0.0) ? 1.0 : 0.0;
        return out;
    }
    if (x <= kSplit) {
        for (int m = 0; m < count; ++m) out[m] = (double)series_j(mu + m, (__float128)x);
        return out;
    }
    // Backward Miller recurrence started well past the turning point, then
    // normalized against whichever base order is farther from a zero.
    const int top = (int)std::ceil(std::max((double)count + 1.0, x - mu)) + 60;
    double fp = 0.0, fc = 1e-305;  // fp = f at index m+1, fc = f at index m
    double f1 = 0.0;
    for (int m = top; m >= 0; --m) {
        const double fm = (2.0 * (mu + m + 1.0)) / x * fc - fp;
        fp = fc;
        fc = fm;
        if (m < count) out[(std::size_t)m] = fm;
        if (m == 1) f1 = fm;
        if (std::abs(fc) > 1e250) {
            const double s = 1e-250;
            fp *= s;
            fc *= s;
            f1 *= s;
            for (auto& v : out) v *= s;
        }
    }
    const double a0 = asym_h1(mu, x).real();
    const double a1 = asym_h1(mu + 1.0, x).real();
    const double scale = std::abs(a0) >= std::abs(a1) ? a0 / fc : a1 / f1;
    for (auto& v : out) v *= scale;
    return out;
}

std::vector<cplx> bessel_i_ladder(double mu, cplx z, int count) {
    if (count < 1) return {};
    if (mu < 0.0 || mu > 2.0) throw domain_error("bessel_i_ladder: base order outside [0, 2]");
    std::vector<cplx> out((std::size_t)count);
    if (z == 0.0) {
        for (int m = 0; m < count; ++m) out[(std::size_t)m] = (mu + m == 0.0) ? 1.0 : 0.0;
        return out;
    }
    if (std::abs(z) <= kSplit) {
        for (int m = 0; m < count; ++m) out[(std::size_t)m] = base_i(mu + m, z);
        return out;
    }
    const double za = std::abs(z);
    const int top = (int)std::ceil(std::max((double)count + 1.0, za - mu)) + 60;
    cplx fp = 0.0, fc = 1e-305;  // fp = I at index m+1, fc = I at index m
    cplx f1 = 0.0;
    for (int m = top; m >= 0; --m) {
        const cplx fm = (2.0 * (mu + m + 1.0)) / z * fc + fp;  // I_{m-1} = I_{m+1} + (2 nu / z) I_m
        fp = fc;
        fc = fm;
        if (m < count) out[(std::size_t)m] = fm;
        if (m == 1) f1 = fm;
        if (std::abs(fc) > 1e250) {
            const double s = 1e-250;
            fp *= s;
            fc *= s;
            f1 *= s;
            for (auto& v : out) v *= s;
        }
    }
    const cplx a0 = base_i(mu, z);
    const cplx a1 = base_i(mu + 1.0, z);
    const cplx scale = std::abs(a0) >= std::abs(a1) ? a0 / fc : a1 / f1;
    for (auto& v : out) v *= scale;
    return out;
}

std::vector<cplx> bessel_k_ladder(double mu, cplx z, int count) {
    if (count < 1) return {};
    if (mu < 0.0 || mu > 2.0) throw domain_error("bessel_k_ladder: base order outside [0, 2]");
    require_order_noninteger(mu, "bessel_k_ladder");
    if (z == 0.0) throw domain_error("bessel_k_ladder: zero argument");
    std::vector<cplx> out((std::size_t)count);
    // K grows with the order: upward recurrence is stable.
    cplx km = base_k(mu, z);
    out[0] = km;
    if (count == 1) return out;
    cplx kc = base_k(mu + 1.0, z);
    out[1] = kc;
    for (int m = 2; m < count; ++m) {
        const cplx kn = km + (2.0 * (mu + m - 1.0)) / z * kc;
        km = kc;
        kc = kn;
        out[(std::size_t)m] = kn;
    }
    return out;
}

cplx bessel_ik_product_large_order(double nu, cplx a, cplx b) {
    // I_nu(a) K_nu(b) = (a/b)^nu / (2 nu) S_I(a) S_K(b)
    //                   - pi/(2 sin pi nu) I_nu(a) I_nu(b),
    // with S_I, S_K the ascending series stripped of their prefactors. Both
    // pieces stay in range at orders where I and K separately do not, and
    // the second piece is negligible once nu > ~1.6 max(|a|, |b|).
    cplx si = 1.0, ti = 1.0, sk = 1.0, tk = 1.0;
    const cplx qa = 0.25 * a * a, qb = 0.25 * b * b;
    for (int j = 1; j < 200; ++j) {
        ti *= qa / (j * (nu + j));
        tk *= qb / (j * (j - nu));
        si += ti;
        sk += tk;
        if (std::abs(ti) < 1e-18 * std::abs(si) && std::abs(tk) < 1e-18 * std::abs(sk)) break;
    }
    const cplx main = std::pow(a / b, nu) / (2.0 * nu) * si * sk;
    // recessive I_nu(a) I_nu(b) piece, assembled in log form to dodge
    // under/overflow; negligible once nu > ~1.6 max(|a|,|b|)
    const double logmag = nu * (std::log(0.5 * std::abs(a)) + std::log(0.5 * std::abs(b))) -
                          2.0 * std::lgamma(nu + 1.0);
    if (logmag < -700.0) return main;
    cplx sib = 1.0, tib = 1.0;
    for (int j = 1; j < 200; ++j) {
        tib *= qb / (j * (nu + j));
        sib += tib;
        if (std::abs(tib) < 1e-18 * std::abs(sib)) break;
    }
    const double ph = nu * (std::arg(a) + std::arg(b));
    const cplx ii = std::exp(logmag) * cplx(std::cos(ph), std::sin(ph)) * si * sib;
    return main - M_PI / (2.0 * std::sin(M_PI * nu)) * ii;
}

cplx bessel_i(double nu, cplx z) {
    require_order_positive(nu, "bessel_i");
    if (z.real() > kOverflowRe)
        throw numerical_error("bessel_i", "argument exceeds the exponent range");
    if (z == 0.0) return 0.0;
    if (std::abs(z) <= kSplit) return to_cplx(series_i(nu, qc{z.real(), z.imag()}));
    if (nu <= 3.5) return asym_i(nu, z);
    const double mu = nu - std::floor(nu);
    const int m = (int)std::floor(nu);
    return bessel_i_ladder(mu, z, m + 1)[(std::size_t)m];
}

cplx bessel_k(double nu, cplx z) {
    require_order_positive(nu, "bessel_k");
    require_order_noninteger(nu, "bessel_k");
    if (z == 0.0) throw domain_error("bessel_k: zero argument");
    if (std::abs(std::arg(z)) >= M_PI - 1e-12)
        throw domain_error("bessel_k: argument on the branch cut");
    if (std::abs(z) <= kSplit) return to_cplx(series_k(nu, qc{z.real(), z.imag()}));
    if (nu <= 3.5) return asym_k(nu, z);
    const double mu = nu - std::floor(nu);
    const int m = (int)std::floor(nu);
    return bessel_k_ladder(mu, z, m + 1)[(std::size_t)m];
}

double bessel_i(double nu, double x) {
    if (x < 0.0) throw domain_error("bessel_i: negative real argument");
    return bessel_i(nu, cplx(x, 0.0)).real();
}

double bessel_k(double nu, double x) {
    if (x < 0.0) throw domain_error("bessel_k: negative real argument");
    return bessel_k(nu, cplx(x, 0.0)).real();
}

cplx hankel1(double nu, double x) {
    require_order_positive(nu, "hankel1");
    require_order_noninteger(nu, "hankel1");
    if (x <= 0.0) throw domain_error("hankel1: argument must be positive");
    if (x <= kSplit) {
        const __float128 xq = (__float128)x;
        return {(double)series_j(nu, xq), (double)series_y(nu, xq)};
    }
    return asym_h1(nu, x);
}

cplx hankel2(double nu, double x) { return std::conj(hankel1(nu, x)); }

}  // namespace abp::specfun
