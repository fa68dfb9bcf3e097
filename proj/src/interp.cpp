#include "zkern/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace zkern {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y))
{
    const int n = static_cast<int>(x_.size());
    if (n < 2 || y_.size() != x_.size())
        throw std::domain_error("CubicSpline: need >= 2 matching samples");
    for (int i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1]))
            throw std::domain_error("CubicSpline: x must be strictly ascending");

    m_.assign(n, 0.0);
    if (n == 2) return;  // linear

    // tridiagonal solve for interior second derivatives, natural ends
    std::vector<double> diag(n, 0.0), rhs(n, 0.0), upper(n, 0.0);
    for (int i = 1; i < n - 1; ++i) {
        double h0 = x_[i] - x_[i - 1];
        double h1 = x_[i + 1] - x_[i];
        diag[i] = 2.0 * (h0 + h1);
        upper[i] = h1;
        rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
    }
    for (int i = 2; i < n - 1; ++i) {
        double h0 = x_[i] - x_[i - 1];
        double f = h0 / diag[i - 1];
        diag[i] -= f * upper[i - 1];
        rhs[i] -= f * rhs[i - 1];
    }
    for (int i = n - 2; i >= 1; --i)
        m_[i] = (rhs[i] - upper[i] * m_[i + 1]) / diag[i];
}

double CubicSpline::operator()(double x) const
{
    const int n = static_cast<int>(x_.size());
    int i = static_cast<int>(std::upper_bound(x_.begin(), x_.end(), x) - x_.begin()) - 1;
    i = std::clamp(i, 0, n - 2);
    double h = x_[i + 1] - x_[i];
    double t = x - x_[i];
    double u = x_[i + 1] - x;
    return (m_[i] * u * u * u + m_[i + 1] * t * t * t) / (6.0 * h)
         + (y_[i] / h - m_[i] * h / 6.0) * u
         + (y_[i + 1] / h - m_[i + 1] * h / 6.0) * t;
}

}  // namespace zkern
