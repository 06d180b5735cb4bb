#include "magsteklov/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "magsteklov/error.hpp"

namespace magsteklov::specfun {

namespace {

constexpr double kSeriesTolerance = 1e-16;
constexpr int kSeriesTermCap = 10000;

bool is_nonpositive_integer(double z) { return z <= 0.0 && z == std::floor(z); }

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "non-finite argument " << name << " = " << v;
        throw InvalidArgument(msg.str());
    }
}

// sin(pi z) with argument reduction to [-1, 1].
double sin_pi(double z) {
    const double r = z - 2.0 * std::round(0.5 * z);
    return std::sin(std::numbers::pi * r);
}

double lgamma_positive(double z) {
    int sign = 1;
    return ::lgamma_r(z, &sign);
}

// Kummer series in the form  sign * exp(log_scale) * sum,  where the
// leading nonzero term has been factored out so the running sum starts at 1.
struct ScaledSeries {
    int sign = 1;
    double log_scale = 0.0;
    double sum = 0.0;
    double abs_sum = 0.0;
    int first_index = 0;
    int terms = 0;
    bool identically_zero = false;
};

// Sums (a)_n x^n / (Gamma(b+n) n!). When `strip_leading_power` is set the
// factor x^{n0} of the first surviving term is left out of log_scale, which
// gives M / x^{n0}.
ScaledSeries kummer_scaled(double a, double b, double x, bool strip_leading_power) {
    require_finite(a, "a");
    require_finite(b, "b");
    require_finite(x, "x");
    if (x < 0.0) throw InvalidArgument("regularized_kummer requires x >= 0");

    ScaledSeries out;
    int n0 = 0;
    if (is_nonpositive_integer(b)) n0 = static_cast<int>(1.0 - b);
    out.first_index = n0;

    // Leading term (a)_{n0} x^{n0} / (Gamma(b+n0) n0!).
    double log_lead = 0.0;
    int sign = 1;
    for (int i = 0; i < n0; ++i) {
        const double f = a + i;
        if (f == 0.0) {
            out.identically_zero = true;
            return out;
        }
        log_lead += std::log(std::abs(f));
        if (f < 0.0) sign = -sign;
    }
    log_lead -= lgamma_positive(n0 + 1.0);
    if (n0 > 0) {
        if (!strip_leading_power) {
            if (x == 0.0) {
                out.identically_zero = true;
                return out;
            }
            log_lead += n0 * std::log(x);
        }
    } else {
        const auto g = log_gamma(b);
        log_lead -= g.log_abs;
        sign *= g.sign;
    }
    out.sign = sign;
    out.log_scale = log_lead;

    double term = 1.0;
    double sum = 0.0;
    double abs_sum = 0.0;
    const double monotone_from = std::abs(a) + std::abs(b) + x + 1.0;
    for (int n = n0; n < n0 + kSeriesTermCap; ++n) {
        sum += term;
        abs_sum += std::abs(term);
        ++out.terms;
        const double num = a + n;
        if (num == 0.0) break;  // polynomial case: all later terms vanish
        const double ratio = num * x / ((n + 1.0) * (b + n));
        const double next = term * ratio;
        if (next == 0.0) break;
        if (n + 1 > monotone_from && std::abs(ratio) < 1.0) {
            const double tail = std::abs(next) / (1.0 - std::abs(ratio));
            const double ref = sum != 0.0 ? std::abs(sum) : abs_sum;
            if (tail <= kSeriesTolerance * ref) {
                out.sum = sum;
                out.abs_sum = abs_sum;
                return out;
            }
        }
        term = next;
        if (n + 1 == n0 + kSeriesTermCap) {
            std::ostringstream msg;
            msg << "Kummer series did not converge within " << kSeriesTermCap
                << " terms (a=" << a << ", b=" << b << ", x=" << x << ")";
            throw AccuracyError(msg.str(), std::abs(term) / std::max(std::abs(sum), 1e-300));
        }
    }
    out.sum = sum;
    out.abs_sum = abs_sum;
    return out;
}

struct LaguerreParts {
    ScaledSeries series;
    int sign = 1;
    double log_scale = 0.0;
};

LaguerreParts laguerre_parts(const LaguerreArgs& args, bool strip_leading_power) {
    require_finite(args.nu, "nu");
    require_finite(args.alpha, "alpha");
    require_finite(args.x, "x");
    if (args.x < 0.0) throw InvalidArgument("laguerre requires x >= 0");
    if (is_nonpositive_integer(args.nu + 1.0) || is_nonpositive_integer(args.nu + args.alpha + 1.0)) {
        std::ostringstream msg;
        msg << "Laguerre normalization pole at nu=" << args.nu << ", alpha=" << args.alpha;
        throw PoleError(msg.str());
    }
    const auto num = log_gamma(args.nu + args.alpha + 1.0);
    const auto den = log_gamma(args.nu + 1.0);
    LaguerreParts parts;
    parts.series = kummer_scaled(-args.nu, args.alpha + 1.0, args.x, strip_leading_power);
    parts.sign = num.sign * den.sign * parts.series.sign;
    parts.log_scale = num.log_abs - den.log_abs + parts.series.log_scale;
    return parts;
}

}  // namespace

SignedLogGamma log_gamma(double z) {
    require_finite(z, "z");
    if (is_nonpositive_integer(z)) {
        std::ostringstream msg;
        msg << "Gamma pole at z = " << z;
        throw PoleError(msg.str());
    }
    if (z > 0.0) return {lgamma_positive(z), 1};
    // Gamma(z) Gamma(1-z) = pi / sin(pi z), with Gamma(1-z) > 0 here.
    const double s = sin_pi(z);
    return {std::log(std::numbers::pi) - std::log(std::abs(s)) - lgamma_positive(1.0 - z),
            s < 0.0 ? -1 : 1};
}

double reciprocal_gamma(double z) {
    require_finite(z, "z");
    if (is_nonpositive_integer(z)) return 0.0;
    const auto g = log_gamma(z);
    return g.sign * std::exp(-g.log_abs);
}

SeriesSum regularized_kummer_sum(double a, double b, double x) {
    const auto s = kummer_scaled(a, b, x, false);
    if (s.identically_zero) return {0.0, 0.0, 0};
    const double scale = std::exp(s.log_scale);
    return {s.sign * scale * s.sum, scale * s.abs_sum, s.terms};
}

double regularized_kummer(double a, double b, double x) { return regularized_kummer_sum(a, b, x).value; }

namespace {

bool is_nonnegative_integer(double v) { return v >= 0.0 && v <= 1e4 && v == std::floor(v); }

// sum_j binom(n+alpha, n-j) (-x)^j / j!, finite for every alpha.
double laguerre_polynomial(int n, double alpha, double x) {
    double sum = 0.0;
    double xj = 1.0;
    for (int j = 0; j <= n; ++j) {
        double binom = 1.0;
        for (int i = 1; i <= n - j; ++i) binom *= (alpha + j + i) / i;
        sum += binom * xj;
        xj *= -x / (j + 1.0);
    }
    return sum;
}

}  // namespace

double laguerre(const LaguerreArgs& args) {
    const double top = args.nu + args.alpha + 1.0;
    if (is_nonnegative_integer(args.nu) && top <= 0.0 && top == std::floor(top)) {
        require_finite(args.x, "x");
        return laguerre_polynomial(static_cast<int>(args.nu), args.alpha, args.x);
    }
    const auto parts = laguerre_parts(args, false);
    if (parts.series.identically_zero) return 0.0;
    return parts.sign * std::exp(parts.log_scale) * parts.series.sum;
}

double laguerre_dx(const LaguerreArgs& args) {
    if (args.nu == 0.0) return 0.0;
    return -laguerre({args.nu - 1.0, args.alpha + 1.0, args.x});
}

ScaledLaguerre laguerre_scaled(const LaguerreArgs& args) {
    const auto parts = laguerre_parts(args, true);
    ScaledLaguerre out;
    out.x_power = parts.series.first_index;
    if (parts.series.identically_zero) return out;
    const double scale = std::exp(parts.log_scale);
    out.value = parts.sign * scale * parts.series.sum;
    out.magnitude = scale * parts.series.abs_sum;
    return out;
}

double exp_taylor_remainder_ratio(int k, double t) {
    if (k < 0 || k > 170) throw InvalidArgument("exp_taylor_remainder requires 0 <= k <= 170");
    require_finite(t, "t");

    // Positive t:  sum_n t^n (k+1)!/(k+1+n)!.
    // Negative t:  e^t * sum_n (k+1)/(k+1+n) |t|^n/n!  (Kummer transformation),
    // so both branches add positive terms only.
    const double s = std::abs(t);
    double sum = 0.0;
    double power = 1.0;  // |t|^n (k+1)!/(k+1+n)!  or  |t|^n/n!
    for (int n = 0; n < kSeriesTermCap; ++n) {
        const double term = t >= 0.0 ? power : power * (k + 1.0) / (k + 1.0 + n);
        sum += term;
        if (term <= 1e-17 * sum && n > s) break;
        power *= t >= 0.0 ? s / (k + 2.0 + n) : s / (n + 1.0);
        if (n + 1 == kSeriesTermCap) throw AccuracyError("exp remainder tail did not converge", term / sum);
    }
    return t >= 0.0 ? sum : std::exp(t) * sum;
}

double exp_taylor_remainder(int k, double t) {
    const double ratio = exp_taylor_remainder_ratio(k, t);
    double lead = 1.0;
    for (int j = 1; j <= k + 1; ++j) lead *= t / j;
    const double out = lead * ratio;
    if (!std::isfinite(out)) throw AccuracyError("exp remainder overflow", 0.0);
    return out;
}

}  // namespace magsteklov::specfun
