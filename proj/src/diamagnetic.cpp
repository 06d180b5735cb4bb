#include "magsteklov/diamagnetic.hpp"

#include <cmath>
#include <functional>

#include "magsteklov/error.hpp"
#include "magsteklov/quadrature.hpp"

namespace magsteklov {

namespace {

// First sign change of f - level from below on a uniform scan, refined by bisection.
std::optional<double> first_upcrossing(const std::function<double(double)>& f, double level, double t_max,
                                       double step) {
    double lo = step;
    double f_lo = f(lo) - level;
    for (double hi = lo + step; hi <= t_max + 1e-12; hi += step) {
        const double f_hi = f(hi) - level;
        if (f_lo < 0.0 && f_hi >= 0.0) {
            double a = lo, b = hi;
            for (int it = 0; it < 200 && b - a > 1e-13 * b; ++it) {
                const double m = 0.5 * (a + b);
                if (f(m) - level < 0.0)
                    a = m;
                else
                    b = m;
            }
            return 0.5 * (a + b);
        }
        lo = hi;
        f_lo = f_hi;
    }
    return std::nullopt;
}

}  // namespace

BoundCoefficients bound_coefficients_b2n(int n) {
    if (n != 1 && n != 2) throw InvalidArgument("bound coefficients are available for n = 1, 2");
    // |w|^2 = c^2 [(1-r^2)^2 |phi|^2 + (1 + r^2/(2n-1))^2 |d^S phi|^2] with
    // int_S |d^S phi|^2 = (2n-1) int_S |phi|^2; volume element r^{2n-1} dr.
    const double m = 2.0 * n - 1.0;
    const double c = m / (2.0 * n);
    const auto rule = gauss_legendre(64, 0.0, 1.0);
    double interior = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double r = rule.nodes[i];
        const double r2 = r * r;
        const double radial = (1.0 - r2) * (1.0 - r2) + m * (1.0 + r2 / m) * (1.0 + r2 / m);
        interior += rule.weights[i] * std::pow(r, 2 * n - 1) * radial;
    }
    interior *= c * c;
    // On the boundary only the tangential part survives: c (1 + 1/(2n-1)) d^S phi = d^S phi.
    const double boundary = (c * (1.0 + 1.0 / m)) * (c * (1.0 + 1.0 / m)) * m;
    const double ratio = interior / boundary;
    const double eta_sup = 1.0;  // |eta| = r on the closed unit ball
    return {n, (n + 1.0) / n, -2.0 * ratio, ratio * eta_sup * eta_sup, interior, boundary};
}

std::vector<BoundPoint> bound_curve(int n, const std::vector<double>& t_grid) {
    if (t_grid.empty()) throw InvalidArgument("bound_curve needs a nonempty grid");
    const auto b = bound_coefficients_b2n(n);
    std::vector<BoundPoint> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        if (!std::isfinite(t) || t < 0.0) throw InvalidArgument("bound_curve requires t >= 0");
        out.push_back({t, b.sigma0 + b.c1 * t + b.c2 * t * t});
    }
    return out;
}

ViolationReport check_violation(Domain domain, const std::vector<double>& t_grid, int k_max) {
    if (domain != Domain::B2 && domain != Domain::B4) throw InvalidArgument("violation check is for B2 or B4");
    for (double t : t_grid)
        if (!(t >= 0.0 && t <= 12.0)) throw InvalidArgument("violation grid must lie in [0, 12]");
    const int n = domain == Domain::B2 ? 1 : 2;
    const auto curve = bound_curve(n, t_grid);
    const double sigma0 = (n + 1.0) / n;
    ViolationReport rep;
    rep.domain = domain;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double t = t_grid[i];
        const auto first = first_eigenvalue(domain, MagneticParameter(t), k_max);
        ViolationRow row;
        row.t = t;
        row.actual = first.value;
        row.bound = curve[i].bound;
        row.sigma0 = sigma0;
        row.violated = first.value < sigma0;
        row.dominated = first.value <= row.bound + 1e-9;
        row.mode = first.mode;
        if (row.violated && (!rep.largest_violating_t || t > *rep.largest_violating_t)) rep.largest_violating_t = t;
        rep.rows.push_back(row);
    }
    if (domain == Domain::B4) {
        rep.branch_crossing = b4_branch_crossing(sigma0);
        rep.first_crossing = b4_first_eigenvalue_crossing(sigma0);
    }
    return rep;
}

std::optional<double> b4_branch_crossing(double level, double t_max) {
    return first_upcrossing([](double t) { return b4_steklov_exact(1, 0, MagneticParameter(t)); }, level, t_max,
                            0.05);
}

std::optional<double> b4_first_eigenvalue_crossing(double level, double t_max, int k_max) {
    return first_upcrossing([k_max](double t) { return first_eigenvalue(Domain::B4, MagneticParameter(t), k_max).value; },
                            level, t_max, 0.1);
}

}  // namespace magsteklov
