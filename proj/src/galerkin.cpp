#include "magsteklov/galerkin.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include <Eigen/Dense>

#include "magsteklov/error.hpp"
#include "magsteklov/quadrature.hpp"

namespace magsteklov {

namespace {

// Shifted Legendre polynomials psi_j(s) = P_j(2s-1) and d/ds, j < n.
void shifted_legendre(int n, double s, std::vector<double>& val, std::vector<double>& der) {
    val.assign(n, 0.0);
    der.assign(n, 0.0);
    const double x = 2.0 * s - 1.0;
    std::vector<double> dx(n, 0.0);
    val[0] = 1.0;
    if (n > 1) {
        val[1] = x;
        dx[1] = 1.0;
    }
    for (int j = 1; j + 1 < n; ++j) {
        val[j + 1] = ((2.0 * j + 1.0) * x * val[j] - j * val[j - 1]) / (j + 1.0);
        dx[j + 1] = dx[j - 1] + (2.0 * j + 1.0) * val[j];
    }
    for (int j = 0; j < n; ++j) der[j] = 2.0 * dx[j];
}

// One trial pair, Q = r^k q(s), P = r^{k-1} u(s), s = r^2.
struct Trial {
    double q = 0.0, dq = 0.0, u = 0.0, du = 0.0;
};

// Trial space at a given s. Smoothness at the origin is built in: for k = 1
// the limits Q/r and P must agree (up to the orientation sign), for k = 0
// Q vanishes to second order.
std::vector<Trial> trials(int k, int n, double s, double orient) {
    std::vector<double> v, d;
    shifted_legendre(n, s, v, d);
    std::vector<Trial> out;
    if (k == 0) {
        for (int j = 0; j < n; ++j) out.push_back({s * v[j], v[j] + s * d[j], 0.0, 0.0});
        for (int j = 0; j < n; ++j)
            out.push_back({0.0, 0.0, s * (1.0 - s) * v[j], (1.0 - 2.0 * s) * v[j] + s * (1.0 - s) * d[j]});
    } else if (k == 1) {
        std::vector<double> v0, d0;
        shifted_legendre(n, 0.0, v0, d0);
        for (int j = 1; j < n; ++j) out.push_back({v[j] - v0[j], d[j], 0.0, 0.0});
        for (int j = 1; j < n; ++j) {
            const double p = v[j] - v0[j];
            out.push_back({0.0, 0.0, (1.0 - s) * p, -p + (1.0 - s) * d[j]});
        }
        out.push_back({orient, 0.0, 1.0 - s, -1.0});
    } else {
        for (int j = 0; j < n; ++j) out.push_back({v[j], d[j], 0.0, 0.0});
        for (int j = 0; j < n; ++j) out.push_back({0.0, 0.0, (1.0 - s) * v[j], -v[j] + (1.0 - s) * d[j]});
    }
    return out;
}

}  // namespace

double rayleigh_galerkin_b2(const GalerkinConfig& config) {
    const int k = config.k;
    const int n = config.basis_size;
    const double t = config.t;
    if (k < 0) throw ConfigurationError("Galerkin mode k must be >= 0");
    if (n < 2) throw ConfigurationError("Galerkin basis size must be >= 2");
    if (!std::isfinite(t) || t < 0.0) throw ConfigurationError("Galerkin requires t >= 0");
    const int m = config.quadrature_order > 0 ? config.quadrature_order : 2 * n + k + 8;
    if (m < 2 * n + 6) {
        std::ostringstream msg;
        msg << "quadrature order " << m << " below 2N+6 = " << 2 * n + 6;
        throw ConfigurationError(msg.str());
    }
    const double orient = config.conjugate ? -1.0 : 1.0;
    const double kk = orient * k;

    const auto rule = gauss_legendre(m, 0.0, 1.0);
    const int dim = static_cast<int>(trials(k, n, 0.5, orient).size());
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::VectorXd f(dim), h(dim);
    for (int i = 0; i < m; ++i) {
        const double r = rule.nodes[i];
        const double s = r * r;
        const auto tr = trials(k, n, s, orient);
        // Q' - kk P - t r^2 P = r^{k-1}(k q + 2 s q' - kk u - t s u)
        // (rP)'/r - kk Q/r^2 - t Q = r^{k-2}(k u + 2 s u' - kk q - t s q)
        const double rf = std::pow(r, k - 1);
        const double rh = std::pow(r, k - 2);
        for (int a = 0; a < dim; ++a) {
            const auto& b = tr[a];
            f[a] = rf * (k * b.q + 2.0 * s * b.dq - kk * b.u - t * s * b.u);
            h[a] = rh * (k * b.u + 2.0 * s * b.du - kk * b.q - t * s * b.q);
        }
        const double w = rule.weights[i];
        A.noalias() += (w / r) * f * f.transpose();
        A.noalias() += (w * r) * h * h.transpose();
    }

    const auto at_one = trials(k, n, 1.0, orient);
    Eigen::VectorXd boundary(dim);
    for (int a = 0; a < dim; ++a) boundary[a] = at_one[a].q;
    if (boundary.cwiseAbs().maxCoeff() == 0.0)
        throw ConfigurationError("all trial functions vanish on the boundary");

    // min c^T A c / (b^T c)^2 = 1 / (b^T A^{-1} b)
    Eigen::LLT<Eigen::MatrixXd> llt(A);
    if (llt.info() != Eigen::Success) throw ConfigurationError("energy matrix is not positive definite");
    const double quad = boundary.dot(llt.solve(boundary));
    if (!(quad > 0.0)) throw ConfigurationError("degenerate boundary functional");
    return 1.0 / quad;
}

}  // namespace magsteklov
