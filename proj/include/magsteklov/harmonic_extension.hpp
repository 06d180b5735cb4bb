#pragma once

// Finite-difference audit of the non-magnetic harmonic extension of the
// first Steklov eigenform on B^{2n}, built from phi-bar_j = x_j - i y_j.

#include <complex>
#include <cstdint>
#include <vector>

namespace magsteklov {

using Point = std::vector<double>;  // (x_1, y_1, ..., x_n, y_n)

/// Components of omega-hat in the basis dx_1, dy_1, ..., for phi-bar_j.
std::vector<std::complex<double>> harmonic_extension_b2n(int n, int j, const Point& x);

struct HarmonicExtensionReport {
    int n = 0;
    int points = 0;
    double tolerance = 1e-6;
    double laplacian_residual = 0.0;  // max |Delta omega-hat_a|
    double lie_residual = 0.0;        // max |L_eta omega-hat + i omega-hat|
    double eta_phi_residual = 0.0;    // max |eta(phi-bar_j) + i phi-bar_j|
    double im_ratio_residual = 0.0;   // max |Im<L_eta w, w>/|w|^2 + 1|
    bool pass = false;
};

/// Checks, for every j and sample point: componentwise harmonicity (central
/// second differences, step 1e-5), the Lie-derivative relation L_eta w = -i w
/// (central difference of the pulled-back rotation flow with step
/// `flow_step`), and eta(phi-bar_j) = -i phi-bar_j. Samples must keep the
/// stencil inside the punctured open ball.
HarmonicExtensionReport verify_harmonic_extension_b2n(int n, double flow_step, const std::vector<Point>& samples,
                                                      double tolerance = 1e-6);

/// `count` points uniform in the shell 0.05 < |x| < 0.95 of R^{2n}.
std::vector<Point> random_interior_points(int n, int count, std::uint64_t seed);

}  // namespace magsteklov
