#include "zkern/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace zkern {

double erf(double x)
{
    double r = std::erf(std::fabs(x));
    return std::signbit(x) ? -r : r;
}

double gaussian_det_asymptotic(double zeta, int nterms)
{
    if (!(zeta > 0.0)) throw std::domain_error("gaussian_det_asymptotic: zeta must be > 0");
    if (nterms < 0) throw std::domain_error("gaussian_det_asymptotic: nterms must be >= 0");
    double sum = 0.0;
    double term = 1.0;  // n = 0, (-1)!! = 1
    double z2 = 2.0 * zeta * zeta;
    for (int n = 0;; ++n) {
        sum += term;
        if (n == nterms) break;
        term *= -(2.0 * n + 1.0) / z2;
    }
    return 1.0 - std::exp(-zeta * zeta) / (2.0 * zeta) * sum;
}

namespace {

// double-double arithmetic, enough for compensated series summation
struct dd {
    double hi, lo;
};

inline dd dd_norm(double a, double b)  // |a| >= |b|
{
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd dd_add(dd x, dd y)
{
    double s = x.hi + y.hi;
    double bb = s - x.hi;
    double e = (x.hi - (s - bb)) + (y.hi - bb);
    return dd_norm(s, e + x.lo + y.lo);
}

inline dd dd_mul(dd x, dd y)
{
    double p = x.hi * y.hi;
    double e = std::fma(x.hi, y.hi, -p);
    return dd_norm(p, e + x.hi * y.lo + x.lo * y.hi);
}

inline dd dd_mul_d(dd x, double d)
{
    double p = x.hi * d;
    double e = std::fma(x.hi, d, -p);
    return dd_norm(p, e + x.lo * d);
}

inline dd dd_div_d(dd x, double d)
{
    double q1 = x.hi / d;
    double p = q1 * d;
    double e = std::fma(q1, d, -p);
    double s = x.hi - p;
    double q2 = (s + (x.lo - e)) / d;
    return dd_norm(q1, q2);
}

const dd kAiryC1 = {0.3550280538878172, 2.05233632436212e-17};    // Ai(0)
const dd kAiryC2 = {0.2588194037928068, -2.522243111610832e-17};  // -Ai'(0)

// Maclaurin in double-double; the oscillatory cancellation near |x| = 8..12
// overwhelms plain doubles
AiryPair airy_maclaurin(double x)
{
    if (x == 0.0) return {kAiryC1.hi, -kAiryC2.hi};

    dd x2 = dd_norm(x * x, std::fma(x, x, -x * x));
    dd x3 = dd_mul_d(x2, x);

    dd f = {1.0, 0.0}, g = {x, 0.0};
    dd sf = f, sg = g;
    dd sfp = {0.0, 0.0}, sgp = {x != 0.0 ? 1.0 : 0.0, 0.0};
    dd fk = f, gk = g;
    for (int k = 0; k < 200; ++k) {
        fk = dd_div_d(dd_mul(fk, x3), (3.0 * k + 2.0) * (3.0 * k + 3.0));
        gk = dd_div_d(dd_mul(gk, x3), (3.0 * k + 3.0) * (3.0 * k + 4.0));
        sf = dd_add(sf, fk);
        sg = dd_add(sg, gk);
        sfp = dd_add(sfp, dd_div_d(dd_mul_d(fk, 3.0 * (k + 1.0)), x));
        sgp = dd_add(sgp, dd_div_d(dd_mul_d(gk, 3.0 * (k + 1.0) + 1.0), x));
        if (std::fabs(fk.hi) < 1e-40 && std::fabs(gk.hi) < 1e-40) break;
    }
    dd ai = dd_add(dd_mul(kAiryC1, sf), dd_mul_d(dd_mul(kAiryC2, sg), -1.0));
    dd aip = dd_add(dd_mul(kAiryC1, sfp), dd_mul_d(dd_mul(kAiryC2, sgp), -1.0));
    return {ai.hi + ai.lo, aip.hi + aip.lo};
}

// u_k, v_k coefficient pair of the large-|x| expansions
struct UV {
    std::vector<double> u, v;
};

UV airy_uv(int kmax)
{
    UV c;
    c.u.assign(kmax + 1, 0.0);
    c.v.assign(kmax + 1, 0.0);
    c.u[0] = c.v[0] = 1.0;
    for (int k = 0; k < kmax; ++k) {
        c.u[k + 1] = c.u[k] * (6.0 * k + 1.0) * (6.0 * k + 3.0) * (6.0 * k + 5.0)
                   / (216.0 * (k + 1.0) * (2.0 * k + 1.0));
        c.v[k + 1] = c.u[k + 1] * (6.0 * (k + 1.0) + 1.0) / (1.0 - 6.0 * (k + 1.0));
    }
    return c;
}

AiryPair airy_asym_pos(double x)
{
    double zeta = (2.0 / 3.0) * std::pow(x, 1.5);
    UV c = airy_uv(40);
    double sa = 0.0, sb = 0.0, pw = 1.0, prev = 1e300;
    for (int k = 0; k <= 40; ++k) {
        double tu = c.u[k] * pw;
        if (std::fabs(tu) > prev) break;  // past the optimal truncation
        prev = std::fabs(tu);
        double sgn = (k & 1) ? -1.0 : 1.0;
        sa += sgn * tu;
        sb += sgn * c.v[k] * pw;
        if (std::fabs(tu) < 1e-20) break;
        pw /= zeta;
    }
    double pre = std::exp(-zeta) / (2.0 * std::sqrt(M_PI));
    double x4 = std::pow(x, 0.25);
    return {pre / x4 * sa, -pre * x4 * sb};
}

AiryPair airy_asym_neg(double x)
{
    double xm = -x;
    double zeta = (2.0 / 3.0) * std::pow(xm, 1.5);
    UV c = airy_uv(40);
    double se = 0.0, so = 0.0, sve = 0.0, svo = 0.0;
    double prev = 1e300;
    for (int k = 0; 2 * k <= 40; ++k) {
        double sgn = (k & 1) ? -1.0 : 1.0;
        double te = c.u[2 * k] / std::pow(zeta, 2.0 * k);
        if (te > prev) break;
        prev = te;
        se += sgn * te;
        sve += sgn * c.v[2 * k] / std::pow(zeta, 2.0 * k);
        if (2 * k + 1 <= 40) {
            so += sgn * c.u[2 * k + 1] / std::pow(zeta, 2.0 * k + 1.0);
            svo += sgn * c.v[2 * k + 1] / std::pow(zeta, 2.0 * k + 1.0);
        }
        if (te < 1e-18) break;
    }
    double cu = std::cos(zeta - M_PI / 4.0), su = std::sin(zeta - M_PI / 4.0);
    double x4 = std::pow(xm, 0.25);
    double sq = std::sqrt(M_PI);
    return {(cu * se + su * so) / (sq * x4), (su * sve - cu * svo) * x4 / sq};
}

}  // namespace

AiryPair airy(double x)
{
    if (x > 8.0) return airy_asym_pos(x);
    if (x < -12.0) return airy_asym_neg(x);
    return airy_maclaurin(x);
}

namespace {

double bessel_j_series(double nu, double x)
{
    double lt0 = nu * std::log(x / 2.0) - std::lgamma(nu + 1.0);
    dd t = {std::exp(lt0), 0.0};
    dd s = t;
    double q = x * x / 4.0;
    for (int k = 1; k <= 300; ++k) {
        t = dd_div_d(dd_mul_d(t, -q), k * (nu + k));
        s = dd_add(s, t);
        if (std::fabs(t.hi) < 1e-35 * std::fabs(s.hi) + 1e-320) break;
    }
    return s.hi + s.lo;
}

double bessel_j_miller(double nu, double x)
{
    int M = static_cast<int>(std::ceil(x + 14.0 + 8.0 * std::cbrt(x)));
    if (M % 2) ++M;
    std::vector<double> vals(M + 1, 0.0);
    double pp = 0.0, p = 1e-30;
    for (int k = M; k >= 0; --k) {
        vals[k] = p;
        double mu = nu + k;
        double pm = (2.0 * mu / x) * p - pp;
        pp = p;
        p = pm;
        if (std::fabs(p) > 1e250) {
            p *= 1e-250;
            pp *= 1e-250;
            for (int j = k; j <= M; ++j) vals[j] *= 1e-250;
        }
    }
    double S = 0.0;
    for (int k = 0; 2 * k <= M; ++k) {
        double c = (k == 0) ? std::exp(std::lgamma(nu + 1.0))
                            : (nu + 2.0 * k) * std::exp(std::lgamma(nu + k) - std::lgamma(k + 1.0));
        S += c * vals[2 * k];
    }
    return vals[0] * std::pow(x / 2.0, nu) / S;
}

}  // namespace

double bessel_j(double nu, double x)
{
    if (!(nu > -0.5)) throw std::domain_error("bessel_j: order must be > -1/2");
    if (x < 0.0) throw std::domain_error("bessel_j: argument must be >= 0");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    if (x <= 12.0) return bessel_j_series(nu, x);
    return bessel_j_miller(nu, x);
}

namespace {

const double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

std::complex<double> ln_gamma_core(std::complex<double> z)
{
    std::complex<double> zm1 = z - 1.0;
    std::complex<double> a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (zm1 + static_cast<double>(i));
    std::complex<double> t = zm1 + 7.5;
    return 0.5 * std::log(2.0 * M_PI) + (zm1 + 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

std::complex<double> ln_gamma(std::complex<double> z)
{
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw std::domain_error("ln_gamma: pole at non-positive integer");
    if (z.real() >= 0.5) return ln_gamma_core(z);
    // reflection through sin(pi z)
    return std::log(M_PI) - std::log(std::sin(M_PI * z)) - ln_gamma_core(1.0 - z);
}

}  // namespace zkern
