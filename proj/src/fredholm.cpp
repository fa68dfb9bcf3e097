#include "zkern/fredholm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace zkern {

DiscretizedOperator discretize(const KernelProfile& profile, double left, double right, int n)
{
    if (n < 2) throw std::domain_error("discretize: need n >= 2");
    if (!(left < right)) throw std::domain_error("discretize: need left < right");
    if (!profile.in_domain(left) || !profile.in_domain(right))
        throw std::domain_error("discretize: interval outside profile domain");

    DiscretizedOperator op;
    op.rule = gauss_legendre(n, left, right);
    op.kind = profile.kind;
    op.profile_name = profile.name;

    double sign = profile.kind == KernelKind::zclass ? 1.0 : -1.0;
    Eigen::MatrixXd kappa(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double v = sign * kernel_eval(profile, op.rule.nodes[i], op.rule.nodes[j]);
            kappa(i, j) = v;
            kappa(j, i) = v;
        }
    }
    op.matrix.resize(n, n);
    op.symmetrized.resize(n, n);
    for (int i = 0; i < n; ++i) {
        double si = std::sqrt(op.rule.weights[i]);
        for (int j = 0; j < n; ++j) {
            double d = i == j ? 1.0 : 0.0;
            op.matrix(i, j) = d + op.rule.weights[j] * kappa(i, j);
            op.symmetrized(i, j) = d + si * std::sqrt(op.rule.weights[j]) * kappa(i, j);
        }
    }
    return op;
}

double log_det(const DiscretizedOperator& op)
{
    Eigen::MatrixXd L = lower_factor(op);
    double s = 0.0;
    for (int i = 0; i < L.rows(); ++i) s += std::log(L(i, i));
    return 2.0 * s;
}

double log_det_auto(const KernelProfile& profile, double left, double right,
                    int n, double tol, int max_n, int* n_used)
{
    double prev = log_det(discretize(profile, left, right, n));
    while (2 * n <= max_n) {
        n *= 2;
        double cur = log_det(discretize(profile, left, right, n));
        if (std::fabs(cur - prev) <= tol) {
            if (n_used) *n_used = n;
            return cur;
        }
        prev = cur;
    }
    if (n_used) *n_used = n;
    return prev;
}

Eigen::VectorXcd resolve(const DiscretizedOperator& op, const Eigen::VectorXcd& rhs)
{
    if (rhs.size() != op.matrix.rows())
        throw std::domain_error("resolve: rhs size mismatch");
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(op.matrix);
    Eigen::VectorXd re = lu.solve(rhs.real());
    Eigen::VectorXd im = lu.solve(rhs.imag());
    if (!re.allFinite() || !im.allFinite())
        throw std::runtime_error("resolve: singular system");
    return re + std::complex<double>(0.0, 1.0) * im;
}

double operator_norm(const DiscretizedOperator& op)
{
    Eigen::MatrixXd K = 0.5 * (op.symmetrized + op.symmetrized.transpose());
    K.diagonal().array() -= 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K, Eigen::EigenvaluesOnly);
    double lo = std::fabs(es.eigenvalues().minCoeff());
    double hi = std::fabs(es.eigenvalues().maxCoeff());
    return std::max(lo, hi);
}

Eigen::MatrixXd lower_factor(const DiscretizedOperator& op)
{
    const int n = static_cast<int>(op.symmetrized.rows());
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        double d = op.symmetrized(k, k);
        for (int j = 0; j < k; ++j) d -= L(k, j) * L(k, j);
        if (!(d > 0.0))
            throw std::runtime_error(
                "operator not positive - determinant sign undefined (pivot " +
                std::to_string(k) + ")");
        L(k, k) = std::sqrt(d);
        for (int i = k + 1; i < n; ++i) {
            double s = op.symmetrized(i, k);
            for (int j = 0; j < k; ++j) s -= L(i, j) * L(k, j);
            L(i, k) = s / L(k, k);
        }
    }
    return L;
}

Eigen::VectorXcd q_function(const DiscretizedOperator& op, const KernelProfile& profile)
{
    if (profile.kind != KernelKind::zclass)
        throw std::domain_error("q_function: profile has no symbol");
    const int n = static_cast<int>(op.rule.nodes.size());
    Eigen::MatrixXd L = lower_factor(op);
    Eigen::VectorXd re(n), im(n);
    for (int i = 0; i < n; ++i) {
        double s = std::sqrt(op.rule.weights[i]);
        std::complex<double> p = profile.phi(op.rule.nodes[i]);
        re(i) = s * p.real();
        im(i) = s * p.imag();
    }
    Eigen::VectorXd yre = L.triangularView<Eigen::Lower>().solve(re);
    Eigen::VectorXd yim = L.triangularView<Eigen::Lower>().solve(im);
    Eigen::VectorXcd q(n);
    for (int i = 0; i < n; ++i) {
        double s = std::sqrt(op.rule.weights[i]);
        q(i) = std::complex<double>(yre(i) / s, yim(i) / s);
    }
    return q;
}

}  // namespace zkern
