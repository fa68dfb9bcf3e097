#pragma once

#include <Eigen/Dense>
#include <complex>

#include "zkern/kernels.hpp"
#include "zkern/quadrature.hpp"

namespace zkern {

// Nystrom matrices for S = I + K on [left, right]. For airy/gaussian kinds
// the stored kernel part is the negative of kernel_eval, so S = I - integral
// of the positive kernel.
struct DiscretizedOperator {
    QuadratureRule rule;
    Eigen::MatrixXd matrix;       // S[i][j] = delta_ij + w_j kappa(x_i, x_j)
    Eigen::MatrixXd symmetrized;  // I + Dw^{1/2} kappa Dw^{1/2}
    KernelKind kind = KernelKind::zclass;
    std::string profile_name;
};

DiscretizedOperator discretize(const KernelProfile& profile, double left, double right, int n);

double log_det(const DiscretizedOperator& op);

// n-doubling until |delta log_det| <= tol, starting at n, capped at max_n.
double log_det_auto(const KernelProfile& profile, double left, double right,
                    int n = 64, double tol = 1e-10, int max_n = 512,
                    int* n_used = nullptr);

// Solves h(x_i) + sum_j w_j kappa(x_i, x_j) h(x_j) = rhs(x_i).
Eigen::VectorXcd resolve(const DiscretizedOperator& op, const Eigen::VectorXcd& rhs);

// Largest |eigenvalue| of the kernel part I - symmetrized.
double operator_norm(const DiscretizedOperator& op);

// Lower-triangular L with symmetrized = L L^T; leading k-by-k blocks factor
// the leading sub-operators, which is what the spectral cumulative sums need.
Eigen::MatrixXd lower_factor(const DiscretizedOperator& op);

// q(x_i) = (L^{-1} phi_tilde)_i / sqrt(w_i), phi_tilde_i = sqrt(w_i) phi(x_i).
Eigen::VectorXcd q_function(const DiscretizedOperator& op, const KernelProfile& profile);

}  // namespace zkern
