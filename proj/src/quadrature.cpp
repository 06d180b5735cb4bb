#include "magsteklov/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "magsteklov/error.hpp"

namespace magsteklov {

QuadratureRule gauss_legendre(int m, double a, double b) {
    if (m < 1) throw InvalidArgument("Gauss-Legendre order must be >= 1");
    QuadratureRule rule;
    rule.nodes.resize(m);
    rule.weights.resize(m);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    for (int i = 0; i < (m + 1) / 2; ++i) {
        // Newton iteration on P_m from the Chebyshev-like initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
        double dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= m; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = m * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute the derivative at the converged root
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= m; ++j) {
            const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        dp = m * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = mid - half * x;
        rule.weights[i] = half * w;
        rule.nodes[m - 1 - i] = mid + half * x;
        rule.weights[m - 1 - i] = half * w;
    }
    return rule;
}

}  // namespace magsteklov
