#pragma once

// Special functions behind the closed-form ball spectra: the regularized
// confluent hypergeometric series, generalized Laguerre functions of real
// degree (upper index possibly a negative integer), and Taylor remainders
// of the exponential summed in tail form.
//
// All functions are pure and thread-safe.

namespace magsteklov::specfun {

struct LaguerreArgs {
    double nu = 0.0;     // degree, any real (half-integers in practice)
    double alpha = 0.0;  // upper index, any real (negative integers in practice)
    double x = 0.0;      // argument, x >= 0
};

/// log|Gamma(z)| together with the sign of Gamma(z). Negative non-integer
/// arguments go through the reflection formula; non-positive integers throw
/// PoleError.
struct SignedLogGamma {
    double log_abs = 0.0;
    int sign = 1;
};
SignedLogGamma log_gamma(double z);

/// 1/Gamma(z); zero at the poles of Gamma.
double reciprocal_gamma(double z);

/// Result of a summed series with the bookkeeping needed for pole tests.
struct SeriesSum {
    double value = 0.0;
    double magnitude = 0.0;  // sum of |terms| (same scaling as value)
    int terms = 0;
};

/// Regularized Kummer function sum_n (a)_n x^n / (Gamma(b+n) n!).
/// Entire in b; for b a non-positive integer the leading 1-b terms vanish.
double regularized_kummer(double a, double b, double x);

/// Same series with its absolute-term magnitude.
SeriesSum regularized_kummer_sum(double a, double b, double x);

/// L_nu^{(alpha)}(x) = Gamma(nu+alpha+1)/Gamma(nu+1) * M(-nu, alpha+1, x)
/// with M regularized. Throws PoleError when nu+1 or nu+alpha+1 is a
/// non-positive integer, except
/// for a non-negative integer degree, where the finite polynomial sum is used.
double laguerre(const LaguerreArgs& args);

/// d/dx L_nu^{(alpha)}(x) = -L_{nu-1}^{(alpha+1)}(x); zero for nu = 0.
double laguerre_dx(const LaguerreArgs& args);

/// L_nu^{(alpha)}(x) / x^{x_power}, where x_power is the order of the
/// zero at the origin (max(0, -alpha) for integer alpha, else 0).
/// Finite and generically nonzero at x = 0, so ratios of Laguerre functions
/// can be taken down to x = 0.
struct ScaledLaguerre {
    double value = 0.0;
    double magnitude = 0.0;
    int x_power = 0;
};
ScaledLaguerre laguerre_scaled(const LaguerreArgs& args);

/// e^t - sum_{j<=k} t^j/j!, summed as a tail series with positive terms
/// (the negative-t case goes through Kummer's transformation). 0 <= k <= 170.
double exp_taylor_remainder(int k, double t);

/// exp_taylor_remainder(k, t) divided by its leading term t^{k+1}/(k+1)!.
/// Equals 1 at t = 0 and never underflows for small t.
double exp_taylor_remainder_ratio(int k, double t);

}  // namespace magsteklov::specfun
