#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "zkern/interp.hpp"
#include "zkern/spectral.hpp"

namespace zkern {

// Spline view of a sampled 2x2 density. Evaluation projects back onto the
// rank-one cone (equal diagonals u, |offdiagonal| = u), which keeps every
// product-integral factor exactly unimodular.
class DensityField {
public:
    DensityField(const std::vector<DensityNode>& samples);

    Eigen::Matrix2cd at(double x) const;

private:
    CubicSpline re_, im_;
};

DensityField density_field(const std::vector<DensityNode>& samples);

struct TransferMatrix2 {
    Eigen::Matrix2cd W;
    std::complex<double> z;
    int steps = 0;
};

// Ordered product over [a, b] of I - i h J C(m) / (m - z), later x on the left.
TransferMatrix2 transfer(const DensityField& density, double a, double b,
                         std::complex<double> z, int steps);

// (W(x + i eps), W(x - i eps)) with the partition refined near x.
std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> boundary_pair(
    const DensityField& density, double a, double b, double x, double eps, int steps);

double jump_residual(const Eigen::Matrix2cd& Wplus, const Eigen::Matrix2cd& Wminus,
                     const Eigen::Matrix2cd& Rsq);

double split_residual(const DensityField& density, double a, double c, double b,
                      std::complex<double> z, int steps);

// || z (W(i rho) - I) - i J sigma1_total ||_max per radius.
std::vector<double> asymptotic_residual(const DensityField& density, double a, double b,
                                        const Eigen::Matrix2cd& sigma1_total,
                                        const std::vector<double>& radii, int steps = 2000);

}  // namespace zkern
