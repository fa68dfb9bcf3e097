#include "zkern/monodromy.hpp"

#include <cmath>
#include <stdexcept>

namespace zkern {

DensityField::DensityField(const std::vector<DensityNode>& samples)
{
    if (samples.size() < 2) throw std::domain_error("DensityField: need >= 2 samples");
    std::vector<double> xs(samples.size()), re(samples.size()), im(samples.size());
    for (size_t i = 0; i < samples.size(); ++i) {
        xs[i] = samples[i].x;
        re[i] = samples[i].d(0, 1).real();
        im[i] = samples[i].d(0, 1).imag();
    }
    re_ = CubicSpline(xs, re);
    im_ = CubicSpline(xs, im);
}

Eigen::Matrix2cd DensityField::at(double x) const
{
    std::complex<double> v(re_(x), im_(x));
    double u = std::abs(v);
    Eigen::Matrix2cd d;
    d << u, v, std::conj(v), u;
    return d;
}

DensityField density_field(const std::vector<DensityNode>& samples)
{
    return DensityField(samples);
}

namespace {

// exact exponential of the nilpotent generator: exp(-i h J C/(m-z)) = I - i h J C/(m-z)
inline Eigen::Matrix2cd factor(const Eigen::Matrix2cd& C, double m, double h,
                               std::complex<double> z)
{
    std::complex<double> c = std::complex<double>(0.0, -1.0) * h / (m - z);
    Eigen::Matrix2cd F;
    F << 1.0 + c * (-C(0, 0)), c * (-C(0, 1)),
         c * C(1, 0), 1.0 + c * C(1, 1);
    return F;
}

Eigen::Matrix2cd product_over(const DensityField& density,
                              const std::vector<double>& breaks,
                              std::complex<double> z)
{
    Eigen::Matrix2cd W = Eigen::Matrix2cd::Identity();
    for (size_t k = 0; k + 1 < breaks.size(); ++k) {
        double h = breaks[k + 1] - breaks[k];
        double m = 0.5 * (breaks[k] + breaks[k + 1]);
        W = factor(density.at(m), m, h, z) * W;  // later x on the left
    }
    return W;
}

std::vector<double> uniform_breaks(double a, double b, int steps)
{
    std::vector<double> t(steps + 1);
    for (int k = 0; k <= steps; ++k) t[k] = a + (b - a) * k / steps;
    t.back() = b;
    return t;
}

}  // namespace

TransferMatrix2 transfer(const DensityField& density, double a, double b,
                         std::complex<double> z, int steps)
{
    if (!(a < b)) throw std::domain_error("transfer: need a < b");
    if (steps < 1) throw std::domain_error("transfer: need steps >= 1");
    if (z.imag() == 0.0 && z.real() >= a && z.real() <= b)
        throw std::domain_error("transfer: z on the integration interval");
    TransferMatrix2 out;
    out.W = product_over(density, uniform_breaks(a, b, steps), z);
    out.z = z;
    out.steps = steps;
    return out;
}

std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> boundary_pair(
    const DensityField& density, double a, double b, double x, double eps, int steps)
{
    if (!(eps > 0.0)) throw std::domain_error("boundary_pair: need eps > 0");
    if (!(x > a && x < b)) throw std::domain_error("boundary_pair: x must be interior");
    int base = std::max(steps, static_cast<int>(std::ceil(200.0 / eps)));
    // refine 10x where the integrand peak of width eps lives
    double lo = x - 10.0 * eps, hi = x + 10.0 * eps;
    std::vector<double> coarse = uniform_breaks(a, b, base);
    std::vector<double> breaks;
    breaks.reserve(coarse.size() + 200);
    for (size_t k = 0; k + 1 < coarse.size(); ++k) {
        breaks.push_back(coarse[k]);
        if (coarse[k + 1] > lo && coarse[k] < hi) {
            double h = coarse[k + 1] - coarse[k];
            for (int j = 1; j < 10; ++j) breaks.push_back(coarse[k] + h * j / 10.0);
        }
    }
    breaks.push_back(b);
    std::complex<double> zp(x, eps), zm(x, -eps);
    return {product_over(density, breaks, zp), product_over(density, breaks, zm)};
}

double jump_residual(const Eigen::Matrix2cd& Wplus, const Eigen::Matrix2cd& Wminus,
                     const Eigen::Matrix2cd& Rsq)
{
    return (Wplus - Wminus * Rsq).cwiseAbs().maxCoeff();
}

double split_residual(const DensityField& density, double a, double c, double b,
                      std::complex<double> z, int steps)
{
    if (!(a < c && c < b)) throw std::domain_error("split_residual: need a < c < b");
    Eigen::Matrix2cd whole = transfer(density, a, b, z, steps).W;
    int steps_ac = std::max(1, static_cast<int>(std::lround(steps * (c - a) / (b - a))));
    int steps_cb = std::max(1, steps - steps_ac);
    Eigen::Matrix2cd left = transfer(density, a, c, z, steps_ac).W;
    Eigen::Matrix2cd right = transfer(density, c, b, z, steps_cb).W;
    return (whole - right * left).cwiseAbs().maxCoeff();
}

std::vector<double> asymptotic_residual(const DensityField& density, double a, double b,
                                        const Eigen::Matrix2cd& sigma1_total,
                                        const std::vector<double>& radii, int steps)
{
    Eigen::Matrix2cd M = std::complex<double>(0.0, 1.0) * jmatrix() * sigma1_total;
    std::vector<double> out;
    out.reserve(radii.size());
    for (double rho : radii) {
        std::complex<double> z(0.0, rho);
        Eigen::Matrix2cd W = transfer(density, a, b, z, steps).W;
        Eigen::Matrix2cd lhs = z * (W - Eigen::Matrix2cd::Identity());
        out.push_back((lhs - M).cwiseAbs().maxCoeff());
    }
    return out;
}

}  // namespace zkern
