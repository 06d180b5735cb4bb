#pragma once

// Independent checks of the closed-form Steklov spectra: Frobenius power
// series for the radial boundary-value systems, residual audits, and a
// Runge-Kutta cross-check of the series.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace magsteklov {

enum class RadialDomain { B2, B4Exact, B4Coexact };

std::string to_string(RadialDomain d);

/// One radial system. For B2, `conjugate` selects the e^{-ik theta} mode;
/// for B4Coexact it selects the d z-bar forms (linear coefficient 2p-k-1
/// instead of 2p-k+1). B4Exact ignores it.
struct RadialSystemSpec {
    RadialDomain domain = RadialDomain::B2;
    int k = 1;
    int p = 0;
    double t = 0.0;
    bool conjugate = false;
};

/// Factored series P = r^{ePs} sum a_j r^{2j}, Q = r^{eQ} sum b_j r^{2j} of the
/// original (P, Q) system, plus the decoupled scalar function it came from
/// (Z-hat / W-hat, or Q itself in the co-exact case).
struct RadialProfile {
    int indicial_exponent_P = 0;
    int indicial_exponent_Q = 0;
    std::vector<double> coeffs_P;
    std::vector<double> coeffs_Q;
    int scalar_exponent = 0;
    std::vector<double> coeffs_scalar;
    int n_terms = 0;
};

struct RadialValues {
    double P = 0.0, dP = 0.0, d2P = 0.0;
    double Q = 0.0, dQ = 0.0, d2Q = 0.0;
};

/// Term-wise evaluation of a profile and its first two derivatives at r > 0.
RadialValues evaluate(const RadialProfile& profile, double r);

/// Value of the scalar series at r >= 0.
double evaluate_scalar(const RadialProfile& profile, double r);

/// Both regular branches (Z, W). For B4Coexact the second profile is empty
/// (the scalar ODE has a single regular branch). Throws TruncationError when
/// the tail at r = 1 exceeds 1e-14 of the summed magnitude.
std::pair<RadialProfile, RadialProfile> series_solve(const RadialSystemSpec& spec, int n_terms);

/// Combination of the regular branches with P(1) = 0, normalized Q(1) = 1.
/// Truncation order is raised automatically until the series converge.
RadialProfile oracle_solution(const RadialSystemSpec& spec);

/// Q'(1) of oracle_solution.
double steklov_eigenvalue_oracle(const RadialSystemSpec& spec);

/// Max over samples of |LHS| of the (P, Q) system, each equation divided by
/// the largest of its individual terms at that r. Zero for a zero profile.
double ode_residual(const RadialProfile& profile, const RadialSystemSpec& spec, const std::vector<double>& sample_r);

/// The B^2 closed-form extension (exponential times Taylor-remainder terms,
/// with the constant fixed by P(1) = 0) expanded as a profile, Q(1) = 1.
RadialProfile b2_closed_form_profile(int k, double t, bool conjugate, int n_terms = 120);

/// The B^4 co-exact closed form e^{t(1-r^2)/2} L(tr^2) / (r^{k+1} L(t)),
/// L = L^{(-(k+1))}_{k-p-1/2}, expanded as a profile.
RadialProfile b4_coexact_closed_form_profile(int k, int p, double t, int n_terms = 120);

/// Integrates the (P, Q) system with classical RK4 from series data at r0 to
/// r = 1 and returns the largest relative disagreement with the series in
/// (P, P', Q, Q') over both branches.
double rk_crosscheck(const RadialSystemSpec& spec, double r0 = 0.25, int steps = 4000);

struct B4ExactReconciliation {
    int k = 0, p = 0;
    double t = 0.0;
    std::optional<double> theorem;  // empty at a pole of that expression
    std::optional<double> proof;
    double oracle = 0.0;
    bool theorem_matches = false;
    bool proof_matches = false;
    double tolerance = 1e-6;
};

B4ExactReconciliation reconcile_b4_exact(int k, int p, double t, double tolerance = 1e-6);

}  // namespace magsteklov
