#include "magsteklov/harmonic_extension.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "magsteklov/error.hpp"

namespace magsteklov {

namespace {

using cld = std::complex<long double>;

constexpr long double kStencil = 1e-5L;

// The field is a cubic polynomial; evaluating it in long double keeps the
// rounding error of the second differences (~eps/h^2) well below 1e-6.
std::vector<cld> field(int n, int j, const std::vector<long double>& x) {
    const int d = 2 * n;
    long double r2 = 0.0L;
    for (long double v : x) r2 += v * v;
    const long double c = (2.0L * n - 1.0L) / (2.0L * n);
    const long double a = 1.0L + r2 / (2.0L * n - 1.0L);
    const long double b = 2.0L * n / (2.0L * n - 1.0L);
    const cld F(x[2 * j], -x[2 * j + 1]);
    std::vector<cld> w(d);
    for (int i = 0; i < d; ++i) {
        cld dF = 0.0L;
        if (i == 2 * j) dF = 1.0L;
        if (i == 2 * j + 1) dF = cld(0.0L, -1.0L);
        w[i] = c * (a * dF - b * F * x[i]);
    }
    return w;
}

// Rotation by angle s in every (x_j, y_j) plane: the flow of eta.
std::vector<long double> rotate(const std::vector<long double>& x, long double s) {
    std::vector<long double> y(x.size());
    const long double cs = std::cos(s), sn = std::sin(s);
    for (std::size_t i = 0; i + 1 < x.size(); i += 2) {
        y[i] = cs * x[i] - sn * x[i + 1];
        y[i + 1] = sn * x[i] + cs * x[i + 1];
    }
    return y;
}

// (D Phi_s)^T w(Phi_s x)
std::vector<cld> pullback(int n, int j, const std::vector<long double>& x, long double s) {
    auto w = field(n, j, rotate(x, s));
    const long double cs = std::cos(s), sn = std::sin(s);
    std::vector<cld> out(w.size());
    for (std::size_t i = 0; i + 1 < w.size(); i += 2) {
        out[i] = cs * w[i] + sn * w[i + 1];
        out[i + 1] = -sn * w[i] + cs * w[i + 1];
    }
    return out;
}

}  // namespace

std::vector<std::complex<double>> harmonic_extension_b2n(int n, int j, const Point& x) {
    if (n < 1 || j < 0 || j >= n || static_cast<int>(x.size()) != 2 * n)
        throw InvalidArgument("harmonic_extension_b2n: bad dimension or index");
    std::vector<long double> xl(x.begin(), x.end());
    const auto w = field(n, j, xl);
    std::vector<std::complex<double>> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out[i] = {static_cast<double>(w[i].real()), static_cast<double>(w[i].imag())};
    return out;
}

HarmonicExtensionReport verify_harmonic_extension_b2n(int n, double flow_step, const std::vector<Point>& samples,
                                                      double tolerance) {
    if (n != 1 && n != 2) throw InvalidArgument("harmonic-extension audit supports n = 1, 2");
    if (!(flow_step > 0.0) || flow_step > 1e-2) throw InvalidArgument("flow step must lie in (0, 1e-2]");
    const int d = 2 * n;
    HarmonicExtensionReport rep;
    rep.n = n;
    rep.tolerance = tolerance;
    rep.points = static_cast<int>(samples.size());
    const long double hf = flow_step;

    for (const auto& pt : samples) {
        if (static_cast<int>(pt.size()) != d) throw InvalidArgument("sample point has the wrong dimension");
        double r = 0.0;
        for (double v : pt) r += v * v;
        r = std::sqrt(r);
        const double margin = 10.0 * std::max(static_cast<double>(kStencil), flow_step);
        if (r < margin || r > 1.0 - margin) {
            std::ostringstream msg;
            msg << "sample at radius " << r << " leaves the finite-difference stencil inside the punctured ball";
            throw InvalidArgument(msg.str());
        }
        const std::vector<long double> x(pt.begin(), pt.end());
        for (int j = 0; j < n; ++j) {
            const auto w0 = field(n, j, x);

            // (a) componentwise Laplacian
            std::vector<cld> lap(d, 0.0L);
            for (int e = 0; e < d; ++e) {
                auto xp = x, xm = x;
                xp[e] += kStencil;
                xm[e] -= kStencil;
                const auto wp = field(n, j, xp);
                const auto wm = field(n, j, xm);
                for (int a = 0; a < d; ++a) lap[a] += (wp[a] - 2.0L * w0[a] + wm[a]) / (kStencil * kStencil);
            }
            for (const auto& v : lap) rep.laplacian_residual = std::max(rep.laplacian_residual, double(std::abs(v)));

            // (b) Lie derivative from the flow
            const auto wp = pullback(n, j, x, hf);
            const auto wm = pullback(n, j, x, -hf);
            cld inner = 0.0L;
            long double norm2 = 0.0L;
            for (int a = 0; a < d; ++a) {
                const cld lie = (wp[a] - wm[a]) / (2.0L * hf);
                rep.lie_residual = std::max(rep.lie_residual, double(std::abs(lie + cld(0.0L, 1.0L) * w0[a])));
                inner += lie * std::conj(w0[a]);
                norm2 += std::norm(w0[a]);
            }
            rep.im_ratio_residual = std::max(rep.im_ratio_residual, double(std::abs(inner.imag() / norm2 + 1.0L)));

            // (c) eta(phi-bar_j) = -y_j d/dx_j phi + x_j d/dy_j phi
            const std::complex<double> phi(pt[2 * j], -pt[2 * j + 1]);
            const std::complex<double> eta_phi = -pt[2 * j + 1] * 1.0 + pt[2 * j] * std::complex<double>(0.0, -1.0);
            rep.eta_phi_residual =
                std::max(rep.eta_phi_residual, std::abs(eta_phi + std::complex<double>(0.0, 1.0) * phi));
        }
    }
    rep.pass = rep.laplacian_residual <= tolerance && rep.lie_residual <= tolerance &&
               rep.im_ratio_residual <= tolerance && rep.eta_phi_residual <= 1e-15;
    return rep;
}

std::vector<Point> random_interior_points(int n, int count, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> radius(0.05, 0.95);
    std::vector<Point> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        Point p(2 * n);
        double norm = 0.0;
        do {
            norm = 0.0;
            for (auto& v : p) {
                v = normal(gen);
                norm += v * v;
            }
        } while (norm == 0.0);
        const double r = radius(gen) / std::sqrt(norm);
        for (auto& v : p) v *= r;
        out.push_back(p);
    }
    return out;
}

}  // namespace magsteklov
