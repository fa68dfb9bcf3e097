#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace zkern {

// Polynomial in the monomial basis on [0, ell], carried together with the
// similarity exponent alpha.
struct PolySample {
    std::vector<std::complex<double>> coeffs;
    double ell = 1.0;
    double alpha = 0.0;
};

// One term c * x^mu with a possibly complex exponent.
struct GenTerm {
    std::complex<double> c;
    std::complex<double> mu;
};
using GenPoly = std::vector<GenTerm>;

std::complex<double> poly_eval(const PolySample& p, double x);

// x p(x) + i alpha int_0^x p(t) dt, exact monomial antiderivatives.
std::complex<double> volterra_A(const PolySample& p, double x);

GenPoly gen_from_poly(const PolySample& p);

// Termwise c x^mu -> c Gamma(mu+1)/Gamma(mu+1+i s alpha) x^{mu + i s alpha}.
GenPoly frac_power_gen(const GenPoly& g, double alpha, int sign);

std::complex<double> gen_eval(const GenPoly& g, double x);

// B p (sign +1) or B^{-1} p (sign -1) at x.
std::complex<double> frac_power(const PolySample& p, int sign, double x);

// Quadrature fallback for non-polynomial inputs; no accuracy contract.
std::complex<double> frac_power_sampled(const std::function<std::complex<double>(double)>& f,
                                        const std::function<std::complex<double>(double)>& fprime,
                                        double alpha, int sign, double x,
                                        double tol = 1e-9);

// max over the grid of |B(A p)(x) - x B(p)(x)|.
double similarity_residual(const PolySample& p, const std::vector<double>& grid);

}  // namespace zkern
