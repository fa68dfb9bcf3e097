#pragma once

#include <complex>
#include <functional>
#include <string>

namespace zkern {

// Boundary modulus R(x) >= 1 on [a, b], R = 1 outside; held as log R.
struct ModulusProfile {
    double a = 0.0;
    double b = 1.0;
    std::function<double(double)> logR;
    double logM = 0.0;  // declared upper bound for log R
};

ModulusProfile modulus_const(double a, double b, double logval);
// CSV with header x,R (ascending x, R >= 1); log R linearly interpolated.
ModulusProfile modulus_from_csv(const std::string& path);

// W(z) = exp(-(i/pi) integral of logR(t)/(t - z) dt over [a, b]).
std::complex<double> outer_transfer(const ModulusProfile& profile, std::complex<double> z);

// |W(z)| minus the same with a half-plane Blaschke factor pinned at w.
double maximality_margin(const ModulusProfile& profile, std::complex<double> z,
                         std::complex<double> w);

}  // namespace zkern
