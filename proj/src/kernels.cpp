#include "zkern/kernels.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "zkern/interp.hpp"
#include "zkern/quadrature.hpp"
#include "zkern/specfun.hpp"

namespace zkern {

Eigen::Matrix2cd jmatrix()
{
    Eigen::Matrix2cd J;
    J << -1.0, 0.0, 0.0, 1.0;
    return J;
}

JModule2 zclass_jmodule(std::complex<double> psi)
{
    if (!std::isfinite(psi.real()) || !std::isfinite(psi.imag()))
        throw std::domain_error("zclass_jmodule: psi must be finite");
    JModule2 m;
    m.psi = psi;
    double r = std::abs(psi);
    std::complex<double> pc = std::conj(psi);
    m.R << 1.0 - r, psi, -pc, 1.0 + r;
    m.Rsq << 1.0 - 2.0 * r, 2.0 * psi, -2.0 * pc, 1.0 + 2.0 * r;
    m.Rinv << 1.0 + r, -psi, pc, 1.0 - r;
    m.D << 2.0 * r, -2.0 * psi, -2.0 * pc, 2.0 * r;
    return m;
}

Eigen::Vector2cd f1_vector(const KernelProfile& profile, double x)
{
    if (profile.kind != KernelKind::zclass)
        throw std::domain_error("f1_vector: profile has no symbol");
    if (!profile.in_domain(x))
        throw std::domain_error("f1_vector: x outside domain");
    std::complex<double> p = profile.phi(x);
    Eigen::Vector2cd f;
    f << p, -std::conj(p);
    return f;
}

double kernel_eval(const KernelProfile& profile, double x, double t)
{
    if (!profile.in_domain(x) || !profile.in_domain(t))
        throw std::domain_error("kernel_eval: argument outside domain");
    switch (profile.kind) {
        case KernelKind::zclass:
            if (x == t)
                return (profile.Ap(x) * profile.B(x) - profile.A(x) * profile.Bp(x)) / M_PI;
            return (profile.A(x) * profile.B(t) - profile.B(x) * profile.A(t)) / (M_PI * (x - t));
        case KernelKind::airy: {
            AiryPair px = airy(x);
            if (x == t) return px.AiPrime * px.AiPrime - x * px.Ai * px.Ai;
            AiryPair pt = airy(t);
            return (px.Ai * pt.AiPrime - px.AiPrime * pt.Ai) / (x - t);
        }
        case KernelKind::gaussian:
            return std::exp(-0.5 * (x * x + t * t));
    }
    throw std::logic_error("kernel_eval: unknown kind");
}

KernelProfile sine_profile(double gamma)
{
    if (gamma < 0.0 || gamma > 1.0)
        throw std::domain_error("sine_profile: need 0 <= gamma <= 1");
    double s = std::sqrt(gamma);
    KernelProfile p;
    p.kind = KernelKind::zclass;
    p.A = [s](double x) { return -s * std::sin(x); };
    p.B = [s](double x) { return s * std::cos(x); };
    p.Ap = [s](double x) { return -s * std::cos(x); };
    p.Bp = [s](double x) { return -s * std::sin(x); };
    p.params["gamma"] = gamma;
    p.name = "sine";
    return p;
}

namespace {

double bessel_jp(double alpha, double x)
{
    if (x == 0.0) {
        if (alpha == 0.0) return 0.0;
        if (alpha == 1.0) return 0.5;
        if (alpha > 1.0) return 0.0;
        throw std::domain_error("bessel derivative singular at 0");
    }
    return (alpha / x) * bessel_j(alpha, x) - bessel_j(alpha + 1.0, x);
}

}  // namespace

KernelProfile bessel_profile(double alpha, double gamma)
{
    if (!(alpha > -0.5)) throw std::domain_error("bessel_profile: need alpha > -1/2");
    if (gamma < 0.0 || gamma > 1.0)
        throw std::domain_error("bessel_profile: need 0 <= gamma <= 1");
    double c = std::sqrt(gamma * M_PI);
    KernelProfile p;
    p.kind = KernelKind::zclass;
    p.A = [c, alpha](double x) { return c * bessel_j(alpha, x); };
    p.Ap = [c, alpha](double x) { return c * bessel_jp(alpha, x); };
    p.B = [c, alpha](double x) {
        // x * A'(x), written without the 1/x singularity
        return c * (alpha * bessel_j(alpha, x) - x * bessel_j(alpha + 1.0, x));
    };
    p.Bp = [c, alpha](double x) {
        double j = bessel_j(alpha, x);
        double jp = bessel_jp(alpha, x);
        double jpp = x == 0.0 ? 0.0 : -jp / x - (1.0 - alpha * alpha / (x * x)) * j;
        return c * (jp + x * jpp);
    };
    p.a = 0.0;
    p.params["alpha"] = alpha;
    p.params["gamma"] = gamma;
    p.name = "bessel";
    return p;
}

KernelProfile bessel_sqrtarg_profile(double alpha, double gamma)
{
    if (!(alpha > -0.5)) throw std::domain_error("bessel_sqrtarg_profile: need alpha > -1/2");
    if (gamma < 0.0 || gamma > 1.0)
        throw std::domain_error("bessel_sqrtarg_profile: need 0 <= gamma <= 1");
    double c = std::sqrt(gamma * M_PI);
    KernelProfile p;
    p.kind = KernelKind::zclass;
    auto aval = [c, alpha](double x) { return c * bessel_j(alpha, std::sqrt(x)); };
    auto apval = [c, alpha](double x) {
        double u = std::sqrt(x);
        return c * bessel_jp(alpha, u) / (2.0 * u);
    };
    p.A = aval;
    p.Ap = apval;
    p.B = [apval](double x) { return x * apval(x); };
    p.Bp = [aval, apval, alpha](double x) {
        double ap = apval(x);
        double app = -(ap + (1.0 - alpha * alpha / x) * aval(x) / 4.0) / x;
        return ap + x * app;  // d/dx of x A'
    };
    p.a = 0.0;
    p.params["alpha"] = alpha;
    p.params["gamma"] = gamma;
    p.name = "bessel_sqrtarg";
    return p;
}

KernelProfile gaussian_profile()
{
    KernelProfile p;
    p.kind = KernelKind::gaussian;
    p.name = "gaussian";
    return p;
}

KernelProfile airy_profile()
{
    KernelProfile p;
    p.kind = KernelKind::airy;
    p.name = "airy";
    return p;
}

KernelProfile custom_profile(std::function<double(double)> A,
                             std::function<double(double)> B,
                             std::function<double(double)> Ap,
                             std::function<double(double)> Bp,
                             double a, double b)
{
    if (!(a < b)) throw std::domain_error("custom_profile: need a < b");
    KernelProfile p;
    p.kind = KernelKind::zclass;
    p.A = std::move(A);
    p.B = std::move(B);
    p.Ap = std::move(Ap);
    p.Bp = std::move(Bp);
    p.a = a;
    p.b = b;
    p.name = "custom";
    return p;
}

KernelProfile custom_profile_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("custom_profile_csv: cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("custom_profile_csv: empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "x,A,B,Aprime,Bprime")
        throw std::runtime_error("custom_profile_csv: expected header x,A,B,Aprime,Bprime");
    std::vector<double> xs, as, bs, aps, bps;
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ss(line);
        double v[5];
        char comma;
        for (int i = 0; i < 5; ++i) {
            if (!(ss >> v[i]))
                throw std::runtime_error("custom_profile_csv: bad value in row " + std::to_string(row));
            if (i < 4 && !(ss >> comma))
                throw std::runtime_error("custom_profile_csv: missing column in row " + std::to_string(row));
        }
        if (!xs.empty() && !(v[0] > xs.back()))
            throw std::runtime_error("custom_profile_csv: x not ascending at row " + std::to_string(row));
        xs.push_back(v[0]);
        as.push_back(v[1]);
        bs.push_back(v[2]);
        aps.push_back(v[3]);
        bps.push_back(v[4]);
    }
    if (xs.size() < 4) throw std::runtime_error("custom_profile_csv: need at least 4 sample rows");

    auto sa = std::make_shared<CubicSpline>(xs, as);
    auto sb = std::make_shared<CubicSpline>(xs, bs);
    auto sap = std::make_shared<CubicSpline>(xs, aps);
    auto sbp = std::make_shared<CubicSpline>(xs, bps);
    KernelProfile p;
    p.kind = KernelKind::zclass;
    p.A = [sa](double x) { return (*sa)(x); };
    p.B = [sb](double x) { return (*sb)(x); };
    p.Ap = [sap](double x) { return (*sap)(x); };
    p.Bp = [sbp](double x) { return (*sbp)(x); };
    p.a = xs.front();
    p.b = xs.back();
    p.name = "custom";
    return p;
}

double airy_truncation_length(double zeta)
{
    for (double L = 0.5; L <= 60.0; L += 0.5) {
        double v = airy(zeta + L).Ai;
        if (v * v <= 1e-18) return L;
    }
    throw std::runtime_error("airy_truncation_length: no decay up to L = 60");
}

namespace {

// 15-point Gauss panel, bisected until the local estimate settles
double adaptive_panel(const std::function<double(double)>& f,
                      const QuadratureRule& base, double a, double b,
                      double tol, int depth)
{
    auto panel = [&](double lo, double hi) {
        double s = 0.0;
        double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
        for (int i = 0; i < base.size(); ++i)
            s += base.weights[i] * f(mid + half * base.nodes[i]);
        return s * half;
    };
    double whole = panel(a, b);
    double m = 0.5 * (a + b);
    double sum2 = panel(a, m) + panel(m, b);
    if (std::fabs(whole - sum2) <= tol || depth <= 0) return sum2;
    return adaptive_panel(f, base, a, m, 0.5 * tol, depth - 1)
         + adaptive_panel(f, base, m, b, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_quad(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, int max_depth)
{
    static const QuadratureRule base = gauss_legendre(15, -1.0, 1.0);
    return adaptive_panel(f, base, a, b, abs_tol, max_depth);
}

double bessel_cd(double x, double t, double alpha, double gamma)
{
    if (x < 0.0 || t < 0.0) throw std::domain_error("bessel_cd: need x, t >= 0");
    auto f = [&](double s) {
        return bessel_j(alpha, std::sqrt(x * s)) * bessel_j(alpha, std::sqrt(t * s));
    };
    return gamma / 4.0 * adaptive_quad(f, 0.0, 1.0, 1e-12);
}

double airy_cd(double x, double t)
{
    auto f = [&](double s) { return airy(x + s).Ai * airy(t + s).Ai; };
    double T = -1.0;
    for (double s = 1.0; s <= 200.0; s += 1.0) {
        if (std::fabs(f(s)) <= 1e-18) {
            T = s;
            break;
        }
    }
    if (T < 0.0) throw std::runtime_error("airy_cd: integrand not decayed by s = 200");
    return adaptive_quad(f, 0.0, T, 1e-12);
}

double general_cd(double x, double t,
                  const std::function<double(double)>& A,
                  const std::function<double(double)>& v,
                  double T)
{
    if (x == t) throw std::domain_error("general_cd: x must differ from t");
    auto f = [&](double u) {
        return A(u + x) * (v(u + x) - v(u + t)) / (M_PI * (x - t)) * A(u + t);
    };
    if (std::fabs(f(T)) > 1e-10)
        throw std::runtime_error("general_cd: integrand not decayed at T");
    return adaptive_quad(f, 0.0, T, 1e-12);
}

}  // namespace zkern
