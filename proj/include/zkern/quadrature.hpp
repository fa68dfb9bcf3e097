#pragma once

#include <vector>

namespace zkern {

// Gauss-Legendre rule on [a, b], nodes ascending.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    double a = 0.0;
    double b = 0.0;

    int size() const { return static_cast<int>(nodes.size()); }
};

QuadratureRule gauss_legendre(int n, double a, double b);

}  // namespace zkern
