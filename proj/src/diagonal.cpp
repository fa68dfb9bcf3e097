#include "zkern/diagonal.hpp"

#include <cmath>
#include <stdexcept>

#include "zkern/kernels.hpp"
#include "zkern/specfun.hpp"

namespace zkern {

namespace {

void check_sample(const PolySample& p) {
    if (!(p.ell > 0.0)) throw std::domain_error("triangular model: ell must be positive");
    if (p.coeffs.size() > 13)
        throw std::domain_error("triangular model: degree above 12 is outside the stability budget");
}

void check_point(const PolySample& p, double x, bool allow_right_end) {
    bool ok = x > 0.0 && (allow_right_end ? x <= p.ell : x < p.ell);
    if (!ok) throw std::domain_error("triangular model: x outside the interval");
}

GenPoly monomial_terms(const std::vector<std::complex<double>>& coeffs) {
    GenPoly g;
    g.reserve(coeffs.size());
    for (std::size_t n = 0; n < coeffs.size(); ++n)
        g.push_back({coeffs[n], std::complex<double>(static_cast<double>(n), 0.0)});
    return g;
}

}  // namespace

std::complex<double> poly_eval(const PolySample& p, double x) {
    std::complex<double> acc = 0.0;
    for (std::size_t k = p.coeffs.size(); k-- > 0;) acc = acc * x + p.coeffs[k];
    return acc;
}

std::complex<double> volterra_A(const PolySample& p, double x) {
    check_sample(p);
    check_point(p, x, false);
    const std::complex<double> ia(0.0, p.alpha);
    std::complex<double> acc = 0.0;
    double xpow = x;
    for (std::size_t n = 0; n < p.coeffs.size(); ++n) {
        acc += p.coeffs[n] * (1.0 + ia / static_cast<double>(n + 1)) * xpow;
        xpow *= x;
    }
    return acc;
}

GenPoly gen_from_poly(const PolySample& p) {
    check_sample(p);
    return monomial_terms(p.coeffs);
}

GenPoly frac_power_gen(const GenPoly& g, double alpha, int sign) {
    if (sign != 1 && sign != -1)
        throw std::domain_error("triangular model: sign must be +1 or -1");
    if (alpha == 0.0) return g;
    const std::complex<double> shift(0.0, sign * alpha);
    GenPoly out;
    out.reserve(g.size());
    for (const auto& t : g) {
        const std::complex<double> ratio =
            std::exp(ln_gamma(t.mu + 1.0) - ln_gamma(t.mu + 1.0 + shift));
        out.push_back({t.c * ratio, t.mu + shift});
    }
    return out;
}

std::complex<double> gen_eval(const GenPoly& g, double x) {
    if (!(x > 0.0))
        throw std::domain_error("triangular model: generalized monomials need x > 0");
    const double lx = std::log(x);
    std::complex<double> acc = 0.0;
    for (const auto& t : g) acc += t.c * std::exp(t.mu * lx);
    return acc;
}

std::complex<double> frac_power(const PolySample& p, int sign, double x) {
    check_sample(p);
    check_point(p, x, true);
    if (p.alpha == 0.0) return poly_eval(p, x);
    return gen_eval(frac_power_gen(gen_from_poly(p), p.alpha, sign), x);
}

std::complex<double> frac_power_sampled(const std::function<std::complex<double>(double)>& f,
                                        const std::function<std::complex<double>(double)>& fprime,
                                        double alpha, int sign, double x, double tol) {
    if (sign != 1 && sign != -1)
        throw std::domain_error("triangular model: sign must be +1 or -1");
    if (!(x > 0.0)) throw std::domain_error("triangular model: x must be positive");
    const std::complex<double> ia(0.0, sign * alpha);
    auto weighted = [&](double t) { return fprime(t) * std::exp(ia * std::log(x - t)); };
    auto re = [&](double t) { return std::real(weighted(t)); };
    auto im = [&](double t) { return std::imag(weighted(t)); };
    const std::complex<double> integral(adaptive_quad(re, 0.0, x, tol),
                                        adaptive_quad(im, 0.0, x, tol));
    const std::complex<double> head = f(0.0) * std::exp(ia * std::log(x));
    return (head + integral) * std::exp(-ln_gamma(1.0 + ia));
}

double similarity_residual(const PolySample& p, const std::vector<double>& grid) {
    check_sample(p);
    const std::complex<double> ia(0.0, p.alpha);
    std::vector<std::complex<double>> lifted(p.coeffs.size() + 1, 0.0);
    for (std::size_t n = 0; n < p.coeffs.size(); ++n)
        lifted[n + 1] = p.coeffs[n] * (1.0 + ia / static_cast<double>(n + 1));
    const GenPoly bp = frac_power_gen(monomial_terms(p.coeffs), p.alpha, 1);
    const GenPoly bap = frac_power_gen(monomial_terms(lifted), p.alpha, 1);
    double worst = 0.0;
    for (double x : grid) {
        if (!(x > 0.0 && x < p.ell))
            throw std::domain_error("triangular model: grid point outside the open interval");
        const double r = std::abs(gen_eval(bap, x) - x * gen_eval(bp, x));
        if (r > worst) worst = r;
    }
    return worst;
}

}  // namespace zkern
