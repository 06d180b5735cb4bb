#pragma once

// Min-max (Rayleigh-quotient) upper bounds for the first B^2 Steklov
// eigenvalue of a single Fourier mode, from polynomial trial spaces.

#include <limits>

namespace magsteklov {

/// Relative rounding floor of a computed Galerkin minimum. Once the trial
/// space resolves the eigenform, successive N differ only by this jitter.
inline constexpr double kGalerkinRoundoff = 64 * std::numeric_limits<double>::epsilon();

struct GalerkinConfig {
    int k = 1;                 // Fourier mode
    double t = 0.0;
    int basis_size = 10;       // N >= 2 polynomials per radial component
    int quadrature_order = 0;  // Gauss points; 0 picks 2N + k + 8
    bool conjugate = true;     // e^{-ik theta}: the branch holding the lowest eigenvalue
};

/// Minimum of D(w, w) / |Q(1)|^2 over trial forms i Q e^{+-ik theta} d theta +
/// P e^{+-ik theta} dr with P(1) = 0, where
///   D = int_0^1 |Q' -+ kP - t r^2 P|^2 / r + |(rP)'/r -+ kQ/r^2 - tQ|^2 r dr.
/// Throws ConfigurationError when the trial space is degenerate.
double rayleigh_galerkin_b2(const GalerkinConfig& config);

}  // namespace magsteklov
