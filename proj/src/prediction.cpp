#include "zkern/prediction.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "zkern/kernels.hpp"
#include "zkern/quadrature.hpp"

namespace zkern {

ModulusProfile modulus_const(double a, double b, double logval)
{
    if (!(a < b)) throw std::domain_error("modulus_const: need a < b");
    if (logval < 0.0) throw std::domain_error("modulus_const: need log R >= 0");
    ModulusProfile p;
    p.a = a;
    p.b = b;
    p.logR = [a, b, logval](double x) { return x >= a && x <= b ? logval : 0.0; };
    p.logM = logval;
    return p;
}

ModulusProfile modulus_from_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("modulus_from_csv: cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("modulus_from_csv: empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "x,R") throw std::runtime_error("modulus_from_csv: expected header x,R");
    std::vector<double> xs, lr;
    double logM = 0.0;
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ss(line);
        double x, R;
        char comma;
        if (!(ss >> x >> comma >> R))
            throw std::runtime_error("modulus_from_csv: bad value in row " + std::to_string(row));
        if (!xs.empty() && !(x > xs.back()))
            throw std::runtime_error("modulus_from_csv: x not ascending at row " + std::to_string(row));
        if (R < 1.0)
            throw std::runtime_error("modulus_from_csv: R < 1 at row " + std::to_string(row));
        xs.push_back(x);
        lr.push_back(std::log(R));
        logM = std::max(logM, lr.back());
    }
    if (xs.size() < 2) throw std::runtime_error("modulus_from_csv: need at least 2 sample rows");

    auto sx = std::make_shared<std::vector<double>>(std::move(xs));
    auto sl = std::make_shared<std::vector<double>>(std::move(lr));
    ModulusProfile p;
    p.a = sx->front();
    p.b = sx->back();
    p.logM = logM;
    p.logR = [sx, sl](double x) {
        const auto& X = *sx;
        if (x < X.front() || x > X.back()) return 0.0;  // R = 1 off the interval
        size_t i = std::upper_bound(X.begin(), X.end(), x) - X.begin() - 1;
        if (i + 1 >= X.size()) i = X.size() - 2;
        double t = (x - X[i]) / (X[i + 1] - X[i]);
        return (1.0 - t) * (*sl)[i] + t * (*sl)[i + 1];
    };
    return p;
}

namespace {

std::complex<double> cauchy_integral(const ModulusProfile& p, std::complex<double> z)
{
    auto fre = [&](double t) {
        std::complex<double> v = p.logR(t) / (t - z);
        return v.real();
    };
    auto fim = [&](double t) {
        std::complex<double> v = p.logR(t) / (t - z);
        return v.imag();
    };
    double dist;
    if (z.real() < p.a)
        dist = std::abs(z - std::complex<double>(p.a, 0.0));
    else if (z.real() > p.b)
        dist = std::abs(z - std::complex<double>(p.b, 0.0));
    else
        dist = std::fabs(z.imag());

    if (dist >= 0.1) {
        static const QuadratureRule rule = gauss_legendre(128, -1.0, 1.0);
        double half = 0.5 * (p.b - p.a), mid = 0.5 * (p.b + p.a);
        std::complex<double> s = 0.0;
        for (int i = 0; i < rule.size(); ++i) {
            double t = mid + half * rule.nodes[i];
            s += rule.weights[i] * p.logR(t) / (t - z);
        }
        return s * half;
    }
    // near the cut: split at the foot of z, adaptive on each side
    double c = std::clamp(z.real(), p.a, p.b);
    std::complex<double> s = 0.0;
    if (c > p.a)
        s += std::complex<double>(adaptive_quad(fre, p.a, c, 1e-11),
                                  adaptive_quad(fim, p.a, c, 1e-11));
    if (c < p.b)
        s += std::complex<double>(adaptive_quad(fre, c, p.b, 1e-11),
                                  adaptive_quad(fim, c, p.b, 1e-11));
    return s;
}

}  // namespace

std::complex<double> outer_transfer(const ModulusProfile& profile, std::complex<double> z)
{
    if (z.imag() == 0.0 && z.real() >= profile.a && z.real() <= profile.b)
        throw std::domain_error("outer_transfer: z on the boundary interval");
    std::complex<double> integral = cauchy_integral(profile, z);
    return std::exp(std::complex<double>(0.0, -1.0 / M_PI) * integral);
}

double maximality_margin(const ModulusProfile& profile, std::complex<double> z,
                         std::complex<double> w)
{
    if (!(z.imag() > 0.0) || !(w.imag() > 0.0))
        throw std::domain_error("maximality_margin: need upper half-plane points");
    std::complex<double> W = outer_transfer(profile, z);
    std::complex<double> V = W * (z - w) / (z - std::conj(w));
    return std::abs(W) - std::abs(V);
}

}  // namespace zkern
