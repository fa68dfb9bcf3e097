#pragma once

#include <complex>

namespace zkern {

double erf(double x);

// Partial sum of the large-zeta expansion of the Gaussian-kernel determinant,
// 1 - (exp(-z^2)/(2z)) * sum_{n=0}^{nterms} (-1)^n (2n-1)!! / (2 z^2)^n,
// with (-1)!! = 1. Divergent for small zeta; returned as-is.
double gaussian_det_asymptotic(double zeta, int nterms);

struct AiryPair {
    double Ai;
    double AiPrime;
};

// Ai and Ai' on the real line, absolute error <= 1e-12 on [-10, 20].
AiryPair airy(double x);

// J_nu(x) for nu > -1/2, x >= 0; absolute error <= 1e-10 for
// x in [0, 100], nu in (-1/2, 10].
double bessel_j(double nu, double x);

// Principal log Gamma; accuracy band Re z in [0.5, 12], |Im z| <= 10.
std::complex<double> ln_gamma(std::complex<double> z);

}  // namespace zkern
