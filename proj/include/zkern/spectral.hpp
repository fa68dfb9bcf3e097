#pragma once

#include <Eigen/Dense>
#include <vector>

#include "zkern/fredholm.hpp"
#include "zkern/kernels.hpp"

namespace zkern {

// sigma1(zeta) accumulated over [a, zeta] through the resolvent route.
Eigen::Matrix2cd sigma1_at(const KernelProfile& profile, double a, double zeta, int n);

struct DensityNode {
    double x;
    Eigen::Matrix2cd d;
};

// Density through the triangular factor: (1/2pi) [[|q|^2, -q^2], [-conj q^2, |q|^2]].
std::vector<DensityNode> sigma1_density(const KernelProfile& profile, double a, double b, int n);

// Independent route: finite differences of zeta -> sigma1_at over zeta_grid.
std::vector<DensityNode> density_fd(const KernelProfile& profile, double a, double b,
                                    const std::vector<double>& zeta_grid, int n);

Eigen::Matrix2cd m_matrix(const Eigen::Matrix2cd& sigma1);

struct DizRecord {
    double zeta;
    double lhs;
    double rhs;
    double residual;
};

// d/dzeta of log det versus the scaled-resolvent form, sine kernel on (0, zeta).
std::vector<DizRecord> diz_residual(double gamma, const std::vector<double>& zeta_grid, int n);

struct SpectralData {
    std::vector<double> zeta_grid;
    std::vector<Eigen::Matrix2cd> sigma1;
    std::vector<DensityNode> density_chol;
    std::vector<DensityNode> density_fd;
    std::vector<Eigen::Matrix2cd> M;
};

SpectralData spectral_data(const KernelProfile& profile, double a, double b,
                           const std::vector<double>& zeta_grid, int n);

}  // namespace zkern
