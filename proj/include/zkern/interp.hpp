#pragma once

#include <vector>

namespace zkern {

// Natural cubic spline through (x_i, y_i), x strictly ascending.
class CubicSpline {
public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    int size() const { return static_cast<int>(x_.size()); }

private:
    std::vector<double> x_, y_, m_;  // m_ holds second derivatives
};

}  // namespace zkern
