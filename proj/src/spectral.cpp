#include "zkern/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace zkern {

namespace {

// resolvent pass shared by sigma1_at and the identity below
struct ResolventData {
    QuadratureRule rule;
    Eigen::VectorXcd phi;
    Eigen::VectorXcd Phi1;
};

ResolventData resolve_phi(const KernelProfile& profile, double a, double zeta, int n)
{
    if (profile.kind != KernelKind::zclass)
        throw std::domain_error("sigma1: profile has no symbol");
    DiscretizedOperator op = discretize(profile, a, zeta, n);
    ResolventData r;
    r.rule = op.rule;
    r.phi.resize(n);
    for (int i = 0; i < n; ++i) r.phi(i) = profile.phi(op.rule.nodes[i]);
    r.Phi1 = resolve(op, r.phi);
    return r;
}

}  // namespace

Eigen::Matrix2cd sigma1_at(const KernelProfile& profile, double a, double zeta, int n)
{
    ResolventData r = resolve_phi(profile, a, zeta, n);
    std::complex<double> s11 = 0.0, s12 = 0.0, s22 = 0.0;
    for (int i = 0; i < n; ++i) {
        double w = r.rule.weights[i];
        s11 += w * r.phi(i) * std::conj(r.Phi1(i));
        s12 -= w * r.phi(i) * r.Phi1(i);
        s22 += w * std::conj(r.phi(i)) * r.Phi1(i);
    }
    double c = 1.0 / (2.0 * M_PI);
    Eigen::Matrix2cd s;
    s << c * s11, c * s12, c * std::conj(s12), c * s22;
    return s;
}

std::vector<DensityNode> sigma1_density(const KernelProfile& profile, double a, double b, int n)
{
    DiscretizedOperator op = discretize(profile, a, b, n);
    Eigen::VectorXcd q = q_function(op, profile);
    std::vector<DensityNode> out(n);
    double c = 1.0 / (2.0 * M_PI);
    for (int i = 0; i < n; ++i) {
        std::complex<double> qi = q(i);
        double m = std::norm(qi);
        std::complex<double> q2 = qi * qi;
        out[i].x = op.rule.nodes[i];
        out[i].d << c * m, -c * q2, -c * std::conj(q2), c * m;
    }
    return out;
}

namespace {

// three-point Lagrange derivative at x0
Eigen::Matrix2cd lagrange3(double x0, double xa, double xb, double xc,
                           const Eigen::Matrix2cd& fa, const Eigen::Matrix2cd& fb,
                           const Eigen::Matrix2cd& fc)
{
    double ca = (2.0 * x0 - xb - xc) / ((xa - xb) * (xa - xc));
    double cb = (2.0 * x0 - xa - xc) / ((xb - xa) * (xb - xc));
    double cc = (2.0 * x0 - xa - xb) / ((xc - xa) * (xc - xb));
    return ca * fa + cb * fb + cc * fc;
}

}  // namespace

std::vector<DensityNode> density_fd(const KernelProfile& profile, double a, double b,
                                    const std::vector<double>& zeta_grid, int n)
{
    const int m = static_cast<int>(zeta_grid.size());
    if (m < 3) throw std::domain_error("density_fd: need at least 3 grid points");
    for (double z : zeta_grid)
        if (!(z > a) || z > b) throw std::domain_error("density_fd: grid outside (a, b]");

    std::vector<Eigen::Matrix2cd> s(m);
    for (int i = 0; i < m; ++i) s[i] = sigma1_at(profile, a, zeta_grid[i], n);

    std::vector<DensityNode> out(m);
    for (int i = 0; i < m; ++i) {
        int j = i == 0 ? 0 : (i == m - 1 ? m - 3 : i - 1);
        out[i].x = zeta_grid[i];
        out[i].d = lagrange3(zeta_grid[i], zeta_grid[j], zeta_grid[j + 1], zeta_grid[j + 2],
                             s[j], s[j + 1], s[j + 2]);
    }
    return out;
}

Eigen::Matrix2cd m_matrix(const Eigen::Matrix2cd& sigma1)
{
    return std::complex<double>(0.0, 1.0) * jmatrix() * sigma1;
}

std::vector<DizRecord> diz_residual(double gamma, const std::vector<double>& zeta_grid, int n)
{
    const int m = static_cast<int>(zeta_grid.size());
    if (m < 5) throw std::domain_error("diz_residual: need at least 5 grid points");
    for (int i = 0; i < m; ++i) {
        if (!(zeta_grid[i] > 0.0)) throw std::domain_error("diz_residual: zeta must be > 0");
        if (i > 0 && !(zeta_grid[i] > zeta_grid[i - 1]))
            throw std::domain_error("diz_residual: grid must ascend");
    }
    KernelProfile profile = sine_profile(gamma);

    std::vector<double> ld(m);
    std::vector<double> rhs(m);
    for (int i = 0; i < m; ++i) {
        double zeta = zeta_grid[i];
        DiscretizedOperator op = discretize(profile, 0.0, zeta, n);
        ld[i] = log_det(op);
        Eigen::VectorXcd phi(n);
        for (int k = 0; k < n; ++k) phi(k) = profile.phi(op.rule.nodes[k]);
        Eigen::VectorXcd Phi1 = resolve(op, phi);
        double acc = 0.0;
        for (int k = 0; k < n; ++k)
            acc += op.rule.weights[k] * (std::conj(phi(k)) * Phi1(k)).real();
        rhs[i] = -acc / (M_PI * zeta);
    }

    auto d3 = [&](int i, int j) {
        double xa = zeta_grid[j], xb = zeta_grid[j + 1], xc = zeta_grid[j + 2];
        double x0 = zeta_grid[i];
        double ca = (2.0 * x0 - xb - xc) / ((xa - xb) * (xa - xc));
        double cb = (2.0 * x0 - xa - xc) / ((xb - xa) * (xb - xc));
        double cc = (2.0 * x0 - xa - xb) / ((xc - xa) * (xc - xb));
        return ca * ld[j] + cb * ld[j + 1] + cc * ld[j + 2];
    };

    std::vector<DizRecord> out(m);
    for (int i = 0; i < m; ++i) {
        int j = i == 0 ? 0 : (i == m - 1 ? m - 3 : i - 1);
        out[i].zeta = zeta_grid[i];
        out[i].lhs = d3(i, j);
        out[i].rhs = rhs[i];
        out[i].residual = std::fabs(out[i].lhs - out[i].rhs);
    }
    return out;
}

SpectralData spectral_data(const KernelProfile& profile, double a, double b,
                           const std::vector<double>& zeta_grid, int n)
{
    SpectralData d;
    d.zeta_grid = zeta_grid;
    d.sigma1.reserve(zeta_grid.size());
    for (double z : zeta_grid) d.sigma1.push_back(sigma1_at(profile, a, z, n));
    d.density_chol = sigma1_density(profile, a, b, n);
    d.density_fd = zkern::density_fd(profile, a, b, zeta_grid, n);
    d.M.reserve(d.sigma1.size());
    for (const auto& s : d.sigma1) d.M.push_back(m_matrix(s));
    return d;
}

}  // namespace zkern
