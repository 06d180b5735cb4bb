#pragma once

#include <vector>

namespace magsteklov {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// m-point Gauss-Legendre rule mapped to [a, b]; exact for polynomials of
/// degree <= 2m-1.
QuadratureRule gauss_legendre(int m, double a = 0.0, double b = 1.0);

}  // namespace magsteklov
