#include "magsteklov/figures.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "magsteklov/error.hpp"
#include "magsteklov/parallel.hpp"

namespace magsteklov {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <class RowFn>
std::vector<std::vector<double>> sweep(const std::vector<double>& t, RowFn&& row) {
    std::vector<std::vector<double>> rows(t.size());
    parallel_for(t.size(), [&](std::size_t i) { rows[i] = row(t[i]); });
    return rows;
}

}  // namespace

std::vector<double> linspace(double a, double b, int n) {
    if (n < 2) throw InvalidArgument("a sweep needs at least 2 points");
    if (!std::isfinite(a) || !std::isfinite(b) || b < a) throw InvalidArgument("sweep range must satisfy start <= stop");
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = a + (b - a) * i / (n - 1);
    out.back() = b;
    return out;
}

Table figure_fig1_left(int k_max, const std::vector<double>& t) {
    if (k_max < 1) throw InvalidArgument("fig1-left needs k_max >= 1");
    Table tab;
    tab.columns.push_back("t");
    for (int k = 1; k <= k_max; ++k)
        for (int p = 0; p <= k; ++p) {
            const std::string idx = "_k" + std::to_string(k) + "_p" + std::to_string(p);
            tab.columns.push_back("exact" + idx);
            tab.columns.push_back("coexact_plus" + idx);
            tab.columns.push_back("coexact_minus" + idx);
        }
    tab.rows = sweep(t, [&](double tv) {
        const MagneticParameter mt(tv);
        std::vector<double> row{tv};
        for (int k = 1; k <= k_max; ++k)
            for (int p = 0; p <= k; ++p) {
                row.push_back(s3_exact_eigenvalue(k, p, mt));
                row.push_back(s3_coexact_eigenvalue(k, p, Sign::Plus, mt));
                row.push_back(s3_coexact_eigenvalue(k, p, Sign::Minus, mt));
            }
        return row;
    });
    tab.comments.push_back("S^3 magnetic Hodge Laplacian on 1-forms, branches k <= " + std::to_string(k_max));
    return tab;
}

Table figure_fig1_right(const std::vector<double>& t, int k_max) {
    Table tab;
    tab.columns = {"t", "lambda1", "k", "p"};
    tab.rows = sweep(t, [&](double tv) {
        const auto f = first_eigenvalue(Domain::S3, MagneticParameter(tv), k_max);
        return std::vector<double>{tv, f.value, double(f.mode.k), f.mode.p ? double(*f.mode.p) : kNaN};
    });
    tab.comments.push_back("first eigenvalue of the S^3 magnetic Hodge Laplacian on 1-forms, k_max = " +
                           std::to_string(k_max));
    return tab;
}

Table figure_fig2(int k_max, const std::vector<double>& t) {
    if (k_max < 0) throw InvalidArgument("fig2 needs k_max >= 0");
    Table tab;
    tab.columns.push_back("t");
    tab.columns.push_back("b2_k0");
    for (int k = 1; k <= k_max; ++k) {
        tab.columns.push_back("b2_plus_k" + std::to_string(k));
        tab.columns.push_back("b2_minus_k" + std::to_string(k));
    }
    tab.rows = sweep(t, [&](double tv) {
        const MagneticParameter mt(tv);
        std::vector<double> row{tv, b2_steklov_eigenvalue(0, Family::B2KZero, mt)};
        for (int k = 1; k <= k_max; ++k) {
            row.push_back(b2_steklov_eigenvalue(k, Family::B2Plus, mt));
            row.push_back(b2_steklov_eigenvalue(k, Family::B2Minus, mt));
        }
        return row;
    });
    tab.comments.push_back("B^2 magnetic Steklov eigenvalues on 1-forms, branches k <= " + std::to_string(k_max));
    return tab;
}

Table first_eigenvalue_sweep(Domain domain, const std::vector<double>& t, int k_max,
                             std::vector<ExcludedPoint>* excluded) {
    Table tab;
    tab.columns = {"t", "value", "k", "p"};
    std::vector<std::vector<ExcludedPoint>> skipped(t.size());
    tab.rows = sweep(t, [&](double tv) {
        const auto f = first_eigenvalue(domain, MagneticParameter(tv), k_max);
        return std::vector<double>{tv, f.value, double(f.mode.k), f.mode.p ? double(*f.mode.p) : kNaN};
    });
    // Only the B^4 formulas have Laguerre denominators that can vanish.
    if (excluded && domain == Domain::B4) {
        parallel_for(t.size(), [&](std::size_t i) {
            skipped[i] = b4_steklov_spectrum(MagneticParameter(t[i]), k_max).excluded;
        });
        for (auto& v : skipped) excluded->insert(excluded->end(), v.begin(), v.end());
    }
    tab.comments.push_back("first eigenvalue on " + to_string(domain) + ", k_max = " + std::to_string(k_max));
    return tab;
}

}  // namespace magsteklov
