#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <map>
#include <string>

namespace zkern {

enum class KernelKind { zclass, airy, gaussian };

// A symbol phi = A + iB with derivative evaluators (zclass), or a direct
// kernel (airy/gaussian). Immutable after construction.
struct KernelProfile {
    KernelKind kind = KernelKind::zclass;
    std::function<double(double)> A, B, Ap, Bp;
    double a = -HUGE_VAL;
    double b = HUGE_VAL;
    std::map<std::string, double> params;
    std::string name;

    std::complex<double> phi(double x) const { return {A(x), B(x)}; }
    bool in_domain(double x) const { return x >= a && x <= b; }
};

// R = I + nilpotent built from one complex value psi; J = diag(-1, 1).
struct JModule2 {
    std::complex<double> psi;
    Eigen::Matrix2cd R, Rsq, Rinv, D;
};

Eigen::Matrix2cd jmatrix();

JModule2 zclass_jmodule(std::complex<double> psi);

Eigen::Vector2cd f1_vector(const KernelProfile& profile, double x);

double kernel_eval(const KernelProfile& profile, double x, double t);

KernelProfile sine_profile(double gamma);
KernelProfile bessel_profile(double alpha, double gamma);
KernelProfile bessel_sqrtarg_profile(double alpha, double gamma);
KernelProfile gaussian_profile();
KernelProfile airy_profile();
KernelProfile custom_profile(std::function<double(double)> A,
                             std::function<double(double)> B,
                             std::function<double(double)> Ap,
                             std::function<double(double)> Bp,
                             double a, double b);
// CSV of samples, header x,A,B,Aprime,Bprime; columns cubic-interpolated.
KernelProfile custom_profile_csv(const std::string& path);

// Smallest L (scanned in 0.5 steps) with Ai(zeta+L)^2 <= 1e-18.
double airy_truncation_length(double zeta);

double bessel_cd(double x, double t, double alpha, double gamma);
double airy_cd(double x, double t);
double general_cd(double x, double t,
                  const std::function<double(double)>& A,
                  const std::function<double(double)>& v,
                  double T);

// Adaptive Gauss quadrature to absolute tolerance; shared utility.
double adaptive_quad(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, int max_depth = 30);

}  // namespace zkern
