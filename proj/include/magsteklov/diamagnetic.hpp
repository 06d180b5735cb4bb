#pragma once

// Quadratic upper bound sigma0 + c1 t + c2 t^2 for the first magnetic
// Steklov eigenvalue on B^{2n}, and its comparison with the exact spectra.

#include <optional>
#include <vector>

#include "magsteklov/spectra.hpp"

namespace magsteklov {

struct BoundCoefficients {
    int n = 0;
    double sigma0 = 0.0;         // (n+1)/n
    double c1 = 0.0;             // -2 |w|^2_M / |w|^2_dM
    double c2 = 0.0;             // |w|^2_M |eta|^2_inf / |w|^2_dM
    double interior_norm = 0.0;  // |w|^2_M per unit spherical norm of phi
    double boundary_norm = 0.0;  // |w|^2_dM per unit spherical norm of phi
};

BoundCoefficients bound_coefficients_b2n(int n);

struct BoundPoint {
    double t = 0.0;
    double bound = 0.0;
};

std::vector<BoundPoint> bound_curve(int n, const std::vector<double>& t_grid);

struct ViolationRow {
    double t = 0.0;
    double actual = 0.0;
    double bound = 0.0;
    double sigma0 = 0.0;
    bool violated = false;   // actual < sigma0
    bool dominated = false;  // actual <= bound + 1e-9
    ModeIndex mode;
};

struct ViolationReport {
    Domain domain = Domain::B2;
    std::vector<ViolationRow> rows;
    std::optional<double> largest_violating_t;
    // B^4 only: where the continuation of sigma_{1,1} (exact branch k=1, p=0)
    // returns to 3/2, and where the minimum over all branches does.
    std::optional<double> branch_crossing;
    std::optional<double> first_crossing;
};

/// Grid must lie in [0, 12]. Throws CutoffInsufficient from the enumeration.
ViolationReport check_violation(Domain domain, const std::vector<double>& t_grid, int k_max = 50);

/// First t in (0, t_max] where the exact (k=1, p=0) B^4 branch reaches `level`.
std::optional<double> b4_branch_crossing(double level = 1.5, double t_max = 12.0);

/// First t in (0, t_max] where the B^4 first eigenvalue (all branches,
/// k <= k_max) reaches `level`.
std::optional<double> b4_first_eigenvalue_crossing(double level = 1.5, double t_max = 12.0, int k_max = 20);

}  // namespace magsteklov
