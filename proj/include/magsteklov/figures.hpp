#pragma once

// Curve data behind the eigenvalue figures. Every sweep is evaluated in
// parallel over t (see thread_count()).

#include <vector>

#include "magsteklov/spectra.hpp"
#include "magsteklov/table_io.hpp"

namespace magsteklov {

inline constexpr int kFigureSamples = 256;

/// n equally spaced points from a to b inclusive (n >= 2).
std::vector<double> linspace(double a, double b, int n);

/// Columns: t, then exact_k{k}_p{p}, coexact_plus_k{k}_p{p}, coexact_minus_k{k}_p{p}
/// for 1 <= k <= k_max: the S^3 1-form branches.
Table figure_fig1_left(int k_max, const std::vector<double>& t);

/// Columns: t, lambda1, k, p: first S^3 1-form eigenvalue and its branch.
Table figure_fig1_right(const std::vector<double>& t, int k_max = 50);

/// Columns: t, b2_k0, then b2_plus_k{k}, b2_minus_k{k} for 1 <= k <= k_max.
Table figure_fig2(int k_max, const std::vector<double>& t);

/// Columns: t, value, k, p (p empty when the family has none). Branch points
/// skipped at a pole are appended to `excluded` when it is given.
Table first_eigenvalue_sweep(Domain domain, const std::vector<double>& t, int k_max = 50,
                             std::vector<ExcludedPoint>* excluded = nullptr);

}  // namespace magsteklov
