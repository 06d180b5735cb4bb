#include "magsteklov/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "magsteklov/error.hpp"
#include "magsteklov/spectra.hpp"
#include "magsteklov/specfun.hpp"

namespace magsteklov {

namespace {

constexpr double kTailTolerance = 1e-14;

// Regular branch y = r^m sum_j y_j r^{2j}, y_0 = 1, of
//   y'' + (A/r) y' - (B/r^2 + c + t^2 r^2) y = 0.
// Matching r^{m+2j-2}: y_j (n(n-1) + A n - B) = c y_{j-1} + t^2 y_{j-2}, n = m+2j.
std::vector<double> frobenius(double A, double B, double c, double t, int m, int n_terms) {
    std::vector<double> y(n_terms, 0.0);
    y[0] = 1.0;
    for (int j = 1; j < n_terms; ++j) {
        const double n = m + 2.0 * j;
        const double d = n * (n - 1.0) + A * n - B;
        if (d == 0.0) throw InvalidArgument("resonant Frobenius recurrence");
        const double rhs = c * y[j - 1] + (j >= 2 ? t * t * y[j - 2] : 0.0);
        y[j] = rhs / d;
    }
    double magnitude = 0.0;
    for (double v : y) magnitude += std::abs(v);
    const double tail = std::abs(y[n_terms - 1]) + (n_terms >= 2 ? std::abs(y[n_terms - 2]) : 0.0);
    if (tail > kTailTolerance * magnitude) {
        std::ostringstream msg;
        msg << "series tail " << tail / magnitude << " above tolerance with " << n_terms << " terms";
        throw TruncationError(msg.str());
    }
    return y;
}

std::vector<double> scaled(const std::vector<double>& v, double factor, int shift = 0) {
    std::vector<double> out(v.size() + shift, 0.0);
    for (std::size_t i = 0; i < v.size(); ++i) out[i + shift] = factor * v[i];
    return out;
}

struct SeriesValue {
    double f = 0.0, df = 0.0, d2f = 0.0;
};

SeriesValue eval_series(const std::vector<double>& c, int e, double r) {
    SeriesValue out;
    const double r2 = r * r;
    double pw = std::pow(r, e);  // r^{e+2j}
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] != 0.0) {
            const double n = e + 2.0 * j;
            out.f += c[j] * pw;
            out.df += c[j] * n * pw / r;
            out.d2f += c[j] * n * (n - 1.0) * pw / r2;
        }
        pw *= r2;
    }
    return out;
}

double sum_abs(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
}

void validate(const RadialSystemSpec& spec) {
    const bool b2 = spec.domain == RadialDomain::B2;
    if (!std::isfinite(spec.t) || spec.t < 0.0) throw InvalidArgument("radial system requires t >= 0");
    if (spec.k < (b2 ? 0 : 1)) throw InvalidArgument("radial system index k out of range");
    if (!b2 && (spec.p < 0 || spec.p > spec.k)) throw InvalidArgument("radial system index p out of range");
}

// Second derivatives (P'', Q'') from the system at r.
std::array<double, 2> second_derivatives(const RadialSystemSpec& spec, double r, double P, double dP, double Q,
                                         double dQ) {
    const double k = spec.k;
    const double t = spec.t;
    const double r2 = r * r;
    switch (spec.domain) {
        case RadialDomain::B2: {
            const double s = spec.conjugate ? -1.0 : 1.0;
            const double pot = 2.0 * s * k * t + t * t * r2;
            const double d2Q = k * k * Q / r2 + dQ / r - 2.0 * s * k * P / r + pot * Q;
            const double d2P = k * k * P / r2 - dP / r + P / r2 - 2.0 * s * k * Q / (r2 * r) + pot * P;
            return {d2P, d2Q};
        }
        case RadialDomain::B4Exact: {
            const double pot = 2.0 * (2 * spec.p - spec.k) * t + t * t * r2;
            const double kk = k * (k + 2.0);
            const double d2Q = kk * Q / r2 - dQ / r - 2.0 * P / r + pot * Q;
            const double d2P = kk * P / r2 - 3.0 * dP / r + 3.0 * P / r2 - 2.0 * kk * Q / (r2 * r) + pot * P;
            return {d2P, d2Q};
        }
        case RadialDomain::B4Coexact: {
            const double a = 2 * spec.p - spec.k + (spec.conjugate ? -1 : 1);
            const double d2Q = (k + 1) * (k + 1) * Q / r2 - dQ / r + (2.0 * a * t + t * t * r2) * Q;
            return {0.0, d2Q};
        }
    }
    return {0.0, 0.0};
}

}  // namespace

std::string to_string(RadialDomain d) {
    switch (d) {
        case RadialDomain::B2: return "b2";
        case RadialDomain::B4Exact: return "b4_exact";
        case RadialDomain::B4Coexact: return "b4_coexact";
    }
    return "?";
}

RadialValues evaluate(const RadialProfile& profile, double r) {
    const auto p = eval_series(profile.coeffs_P, profile.indicial_exponent_P, r);
    const auto q = eval_series(profile.coeffs_Q, profile.indicial_exponent_Q, r);
    return {p.f, p.df, p.d2f, q.f, q.df, q.d2f};
}

double evaluate_scalar(const RadialProfile& profile, double r) {
    double sum = 0.0;
    double pw = profile.scalar_exponent == 0 ? 1.0 : std::pow(r, profile.scalar_exponent);
    for (double c : profile.coeffs_scalar) {
        sum += c * pw;
        pw *= r * r;
    }
    return sum;
}

std::pair<RadialProfile, RadialProfile> series_solve(const RadialSystemSpec& spec, int n_terms) {
    validate(spec);
    if (n_terms < 20) throw InvalidArgument("series_solve requires n_terms >= 20");
    const int k = spec.k;
    const double t = spec.t;
    RadialProfile z, w;
    z.n_terms = w.n_terms = n_terms;
    z.indicial_exponent_P = w.indicial_exponent_P = k - 1;
    z.indicial_exponent_Q = w.indicial_exponent_Q = k;

    switch (spec.domain) {
        case RadialDomain::B2: {
            if (k == 0) {
                // Decoupled: Q'' - Q'/r - t^2 r^2 Q = 0 (regular branch r^2),
                // P'' + P'/r - P/r^2 - t^2 r^2 P = 0 (regular branch r).
                const auto q = frobenius(-1.0, 0.0, 0.0, t, 2, n_terms);
                const auto p = frobenius(1.0, 1.0, 0.0, t, 1, n_terms);
                z.coeffs_Q = scaled(q, 1.0, 1);
                z.scalar_exponent = 2;
                z.coeffs_scalar = q;
                w.coeffs_P = scaled(p, 1.0, 1);
                w.scalar_exponent = 1;
                w.coeffs_scalar = p;
                break;
            }
            // Z-hat and W-hat of the hatted system; in the conjugate case the
            // plain branch is P-hat - Q-hat and the r^2 branch is P-hat + Q-hat.
            const double s = spec.conjugate ? -1.0 : 1.0;
            const auto a = frobenius(2.0 * k - 1.0, 0.0, 2.0 * s * k * t, t, 0, n_terms);
            const auto b = frobenius(2.0 * k - 1.0, 4.0 * k, 2.0 * s * k * t, t, 2, n_terms);
            z.scalar_exponent = 0;
            z.coeffs_scalar = scaled(a, 2.0);
            z.coeffs_P = scaled(a, 1.0);
            z.coeffs_Q = scaled(a, s);
            w.scalar_exponent = 2;
            w.coeffs_scalar = b;
            w.coeffs_P = scaled(b, 0.5, 1);
            w.coeffs_Q = scaled(b, -0.5 * s, 1);
            break;
        }
        case RadialDomain::B4Exact: {
            const double c = 2.0 * (2 * spec.p - k) * t;
            const double kf = k;
            const auto a = frobenius(2.0 * k + 1.0, 0.0, c, t, 0, n_terms);
            const auto b = frobenius(2.0 * k + 1.0, 4.0 * k + 4.0, c, t, 2, n_terms);
            // Z-hat(0) = (2k+2)/(k+2); Q-hat = (k+2)(Z-W)/(2k+2), P-hat = (k+2)(Z-Q-hat).
            const double z0 = (2.0 * kf + 2.0) / (kf + 2.0);
            z.scalar_exponent = 0;
            z.coeffs_scalar = scaled(a, z0);
            z.coeffs_Q = scaled(a, z0 * (kf + 2.0) / (2.0 * kf + 2.0));
            z.coeffs_P = scaled(a, z0 * kf * (kf + 2.0) / (2.0 * kf + 2.0));
            w.scalar_exponent = 2;
            w.coeffs_scalar = b;
            w.coeffs_Q = scaled(b, -(kf + 2.0) / (2.0 * kf + 2.0), 1);
            w.coeffs_P = scaled(b, (kf + 2.0) * (kf + 2.0) / (2.0 * kf + 2.0), 1);
            break;
        }
        case RadialDomain::B4Coexact: {
            const double a = 2 * spec.p - k + (spec.conjugate ? -1 : 1);
            const auto q = frobenius(1.0, (k + 1.0) * (k + 1.0), 2.0 * a * t, t, k + 1, n_terms);
            z.indicial_exponent_Q = k + 1;
            z.coeffs_Q = q;
            z.scalar_exponent = k + 1;
            z.coeffs_scalar = q;
            w = RadialProfile{};
            w.indicial_exponent_P = k - 1;
            w.indicial_exponent_Q = k + 1;
            break;
        }
    }
    return {z, w};
}

RadialProfile oracle_solution(const RadialSystemSpec& spec) {
    validate(spec);
    std::pair<RadialProfile, RadialProfile> branches;
    bool solved = false;
    for (int n = 40; n <= 2560 && !solved; n *= 2) {
        try {
            branches = series_solve(spec, n);
            solved = true;
        } catch (const TruncationError&) {
            if (n * 2 > 2560) throw;
        }
    }
    auto& [z, w] = branches;

    RadialProfile out = z;
    if (spec.domain != RadialDomain::B4Coexact) {
        const double pz = evaluate(z, 1.0).P;
        const double pw = evaluate(w, 1.0).P;
        const double mz = sum_abs(z.coeffs_P);
        const double mw = sum_abs(w.coeffs_P);
        if (std::abs(pz) <= kTailTolerance * mz && std::abs(pw) <= kTailTolerance * mw)
            throw DegeneracyError("both regular branches satisfy P(1) = 0");
        // alpha Z + beta W with alpha P_Z(1) + beta P_W(1) = 0.
        const double alpha = pw;
        const double beta = -pz;
        auto combine = [&](const std::vector<double>& u, const std::vector<double>& v) {
            std::vector<double> c(std::max(u.size(), v.size()), 0.0);
            for (std::size_t i = 0; i < u.size(); ++i) c[i] += alpha * u[i];
            for (std::size_t i = 0; i < v.size(); ++i) c[i] += beta * v[i];
            return c;
        };
        out.coeffs_P = combine(z.coeffs_P, w.coeffs_P);
        out.coeffs_Q = combine(z.coeffs_Q, w.coeffs_Q);
        out.coeffs_scalar.clear();
    }
    const double q1 = evaluate(out, 1.0).Q;
    const double qmag = sum_abs(out.coeffs_Q);
    if (!(std::abs(q1) >= 1e-12 * std::max(qmag, 1e-300)) || std::abs(q1) < 1e-300)
        throw NormalizationError("Q(1) vanishes for the P(1) = 0 combination");
    for (auto& c : out.coeffs_P) c /= q1;
    for (auto& c : out.coeffs_Q) c /= q1;
    return out;
}

double steklov_eigenvalue_oracle(const RadialSystemSpec& spec) { return evaluate(oracle_solution(spec), 1.0).dQ; }

double ode_residual(const RadialProfile& profile, const RadialSystemSpec& spec, const std::vector<double>& sample_r) {
    validate(spec);
    const double k = spec.k;
    const double t = spec.t;
    double worst = 0.0;
    auto record = [&](std::initializer_list<double> terms) {
        double sum = 0.0, scale = 0.0;
        for (double x : terms) {
            sum += x;
            scale = std::max(scale, std::abs(x));
        }
        if (scale > 0.0) worst = std::max(worst, std::abs(sum) / scale);
    };
    for (double r : sample_r) {
        if (!(r > 0.0 && r <= 1.0)) throw InvalidArgument("residual samples must lie in (0, 1]");
        const auto v = evaluate(profile, r);
        const double r2 = r * r;
        switch (spec.domain) {
            case RadialDomain::B2: {
                const double s = spec.conjugate ? -1.0 : 1.0;
                const double pot = 2.0 * s * k * t + t * t * r2;
                record({k * k * v.Q / r2, -v.d2Q, v.dQ / r, -2.0 * s * k * v.P / r, pot * v.Q});
                record({k * k * v.P / r2, -v.d2P, -v.dP / r, v.P / r2, -2.0 * s * k * v.Q / (r2 * r), pot * v.P});
                break;
            }
            case RadialDomain::B4Exact: {
                const double pot = 2.0 * (2 * spec.p - spec.k) * t + t * t * r2;
                const double kk = k * (k + 2.0);
                record({kk * v.Q / r2, -v.d2Q, -v.dQ / r, -2.0 * v.P / r, pot * v.Q});
                record({kk * v.P / r2, -v.d2P, -3.0 * v.dP / r, 3.0 * v.P / r2, -2.0 * kk * v.Q / (r2 * r),
                        pot * v.P});
                break;
            }
            case RadialDomain::B4Coexact: {
                const double a = 2 * spec.p - spec.k + (spec.conjugate ? -1 : 1);
                record({(k + 1) * (k + 1) * v.Q / r2, -v.d2Q, -v.dQ / r, (2.0 * a * t + t * t * r2) * v.Q});
                break;
            }
        }
    }
    return worst;
}

RadialProfile b2_closed_form_profile(int k, double t, bool conjugate, int n_terms) {
    if (k < 1) throw InvalidArgument("closed-form B^2 profile requires k >= 1");
    if (!std::isfinite(t) || t < 0.0) throw InvalidArgument("closed-form B^2 profile requires t >= 0");
    const double s = conjugate ? -1.0 : 1.0;
    const double tau = s * t;

    // e^{x/2} and G(x) = sum_{m>=1} (-1)^{m+k} x^m/(m+k)!, so that the
    // W-hat closed form is  c (-1)^k k! tau^k F(tau r^2)  with F = -e^{x/2} G.
    std::vector<double> e_half(n_terms), g(n_terms, 0.0), f(n_terms, 0.0);
    e_half[0] = 1.0;
    for (int i = 1; i < n_terms; ++i) e_half[i] = e_half[i - 1] * 0.5 / i;
    double inv_fact = 1.0;  // 1/(m+k)!
    for (int j = 1; j <= k; ++j) inv_fact /= j;
    for (int m = 1; m < n_terms; ++m) {
        inv_fact /= (m + k);
        g[m] = ((m + k) % 2 == 0 ? 1.0 : -1.0) * inv_fact;
    }
    for (int m = 1; m < n_terms; ++m)
        for (int j = 1; j <= m; ++j) f[m] -= e_half[m - j] * g[j];

    // c tau^k = -2(k+1) / (tau S_k(-tau)) with S the remainder ratio; the 1/tau
    // cancels against the x^1 start of F, so t = 0 is admissible.
    const double ratio = specfun::exp_taylor_remainder_ratio(k, -tau);
    double k_fact = 1.0;
    for (int j = 2; j <= k; ++j) k_fact *= j;
    const double sign_k = k % 2 == 0 ? 1.0 : -1.0;
    const double pref = sign_k * k_fact * (-2.0 * (k + 1.0) / ratio);

    std::vector<double> plain(n_terms), wser(n_terms, 0.0);
    double tau_pow = 1.0;  // tau^m for plain, tau^{m-1} for W
    for (int m = 0; m < n_terms; ++m) {
        plain[m] = 2.0 * e_half[m] * tau_pow;
        if (m >= 1) wser[m] = pref * f[m] * (m == 1 ? 1.0 : std::pow(tau, m - 1));
        tau_pow *= tau;
    }

    RadialProfile out;
    out.n_terms = n_terms;
    out.indicial_exponent_P = k - 1;
    out.indicial_exponent_Q = k;
    out.coeffs_P.resize(n_terms);
    out.coeffs_Q.resize(n_terms);
    for (int m = 0; m < n_terms; ++m) {
        out.coeffs_P[m] = 0.5 * (plain[m] + wser[m]);
        out.coeffs_Q[m] = 0.5 * s * (plain[m] - wser[m]);
    }
    out.scalar_exponent = 2;
    out.coeffs_scalar = wser;  // W-hat closed form, starting at r^2
    out.coeffs_scalar.erase(out.coeffs_scalar.begin());
    const double q1 = evaluate(out, 1.0).Q;
    for (auto& c : out.coeffs_P) c /= q1;
    for (auto& c : out.coeffs_Q) c /= q1;
    return out;
}

RadialProfile b4_coexact_closed_form_profile(int k, int p, double t, int n_terms) {
    if (k < 1 || p < 0 || p > k) throw InvalidArgument("closed-form B^4 co-exact profile: index out of range");
    if (!std::isfinite(t) || t < 0.0) throw InvalidArgument("closed-form B^4 co-exact profile requires t >= 0");
    // L^{(-(k+1))}_nu(x) is proportional to sum_{n>=k+1} (-nu)_n x^n / ((n-k-1)! n!).
    const double nu = k - p - 0.5;
    std::vector<double> ell(n_terms);
    double lead = 1.0;
    for (int i = 0; i <= k; ++i) lead *= (-nu + i) / (i + 1.0);  // (-nu)_{k+1}/(k+1)!
    ell[0] = lead;
    for (int j = 1; j < n_terms; ++j) {
        const double n = k + j;  // previous index
        ell[j] = ell[j - 1] * (-nu + n) * t / ((n + 1.0) * (n - k));
    }
    std::vector<double> q(n_terms, 0.0);
    std::vector<double> e_half(n_terms);
    e_half[0] = 1.0;
    for (int i = 1; i < n_terms; ++i) e_half[i] = e_half[i - 1] * (-0.5 * t) / i;
    for (int j = 0; j < n_terms; ++j)
        for (int i = 0; i <= j; ++i) q[j] += e_half[i] * ell[j - i];

    RadialProfile out;
    out.n_terms = n_terms;
    out.indicial_exponent_P = k - 1;
    out.indicial_exponent_Q = k + 1;
    double q1 = 0.0;
    for (double c : q) q1 += c;
    for (auto& c : q) c /= q1;
    out.coeffs_Q = q;
    out.scalar_exponent = k + 1;
    out.coeffs_scalar = q;
    return out;
}

double rk_crosscheck(const RadialSystemSpec& spec, double r0, int steps) {
    validate(spec);
    if (!(r0 > 0.0 && r0 < 1.0) || steps < 1) throw InvalidArgument("rk_crosscheck: bad r0 or step count");
    const auto branches = [&] {
        for (int n = 40;; n *= 2) {
            try {
                return series_solve(spec, n);
            } catch (const TruncationError&) {
                if (n >= 2560) throw;
            }
        }
    }();
    const bool scalar_only = spec.domain == RadialDomain::B4Coexact;
    double worst = 0.0;
    for (int b = 0; b < (scalar_only ? 1 : 2); ++b) {
        const auto& prof = b == 0 ? branches.first : branches.second;
        const auto start = evaluate(prof, r0);
        std::array<double, 4> y{start.P, start.dP, start.Q, start.dQ};
        auto rhs = [&](double r, const std::array<double, 4>& s) {
            const auto d2 = second_derivatives(spec, r, s[0], s[1], s[2], s[3]);
            return std::array<double, 4>{s[1], d2[0], s[3], d2[1]};
        };
        const double h = (1.0 - r0) / steps;
        for (int i = 0; i < steps; ++i) {
            const double r = r0 + i * h;
            const auto k1 = rhs(r, y);
            std::array<double, 4> tmp;
            for (int j = 0; j < 4; ++j) tmp[j] = y[j] + 0.5 * h * k1[j];
            const auto k2 = rhs(r + 0.5 * h, tmp);
            for (int j = 0; j < 4; ++j) tmp[j] = y[j] + 0.5 * h * k2[j];
            const auto k3 = rhs(r + 0.5 * h, tmp);
            for (int j = 0; j < 4; ++j) tmp[j] = y[j] + h * k3[j];
            const auto k4 = rhs(r + h, tmp);
            for (int j = 0; j < 4; ++j) y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        }
        const auto end = evaluate(prof, 1.0);
        const std::array<double, 4> ref{end.P, end.dP, end.Q, end.dQ};
        double scale = 0.0;
        for (double v : ref) scale = std::max(scale, std::abs(v));
        if (scale == 0.0) continue;
        for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(y[j] - ref[j]) / scale);
    }
    return worst;
}

B4ExactReconciliation reconcile_b4_exact(int k, int p, double t, double tolerance) {
    B4ExactReconciliation rep;
    rep.k = k;
    rep.p = p;
    rep.t = t;
    rep.tolerance = tolerance;
    rep.oracle = steklov_eigenvalue_oracle({RadialDomain::B4Exact, k, p, t, false});
    const MagneticParameter tp(t);
    auto close = [&](double v) { return std::abs(v - rep.oracle) <= tolerance * std::abs(rep.oracle); };
    try {
        rep.theorem = b4_steklov_exact(k, p, tp, B4ExactVariant::TheoremStatement);
        rep.theorem_matches = close(*rep.theorem);
    } catch (const PoleError&) {
    }
    try {
        rep.proof = b4_steklov_exact(k, p, tp, B4ExactVariant::ProofQPrime);
        rep.proof_matches = close(*rep.proof);
    } catch (const PoleError&) {
    }
    return rep;
}

}  // namespace magsteklov
