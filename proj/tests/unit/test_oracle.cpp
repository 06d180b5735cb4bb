#include <cmath>

#include "doctest.h"
#include "magsteklov/error.hpp"
#include "magsteklov/oracle.hpp"
#include "magsteklov/spectra.hpp"
#include "magsteklov/specfun.hpp"

using namespace magsteklov;

namespace {
double rel(double v, double ref) { return std::abs(v - ref) / std::abs(ref); }
const std::vector<double> kR{0.25, 0.5, 0.75, 1.0};
}  // namespace

TEST_CASE("B2 oracle agrees with the closed forms") {
    for (int k = 0; k <= 10; ++k)
        for (bool conj : {false, true}) {
            if (k == 0 && conj) continue;
            const Family f = k == 0 ? Family::B2KZero : conj ? Family::B2Plus : Family::B2Minus;
            for (double t : {0.1, 0.5, 1.0, 2.0, 5.0}) {
                const double o = steklov_eigenvalue_oracle({RadialDomain::B2, k, 0, t, conj});
                const double c = b2_steklov_eigenvalue(k, f, MagneticParameter(t));
                CAPTURE(k);
                CAPTURE(conj);
                CAPTURE(t);
                CHECK(std::abs(o - c) <= 1e-8 * std::max(1.0, std::abs(c)));
            }
        }
}

TEST_CASE("conjugate k = 1 mode at t = 1 gives 1/(e-2)") {
    CHECK(rel(steklov_eigenvalue_oracle({RadialDomain::B2, 1, 0, 1.0, true}), 1.0 / (std::exp(1.0) - 2.0)) < 1e-12);
}

TEST_CASE("B4 co-exact oracle agrees with the closed form") {
    for (int k = 1; k <= 5; ++k)
        for (int p = 0; p <= k; ++p)
            for (double t : {0.25, 1.0, 2.0})
                for (Sign s : {Sign::Plus, Sign::Minus}) {
                    const double o = steklov_eigenvalue_oracle({RadialDomain::B4Coexact, k, p, t, s == Sign::Plus});
                    CHECK(rel(b4_steklov_coexact(k, p, s, MagneticParameter(t)), o) < 1e-6);
                }
}

TEST_CASE("B4 exact reconciliation finds a matching printed form") {
    struct Case {
        int k, p;
        double t;
    };
    for (const Case c : {Case{1, 0, 1e-4}, Case{1, 0, 1.0}, Case{2, 2, 0.5}, Case{2, 1, 0.5}, Case{4, 3, 2.0}}) {
        const auto rep = reconcile_b4_exact(c.k, c.p, c.t);
        CHECK((rep.theorem_matches || rep.proof_matches));
        CHECK(rep.theorem_matches);
        CHECK(rep.proof_matches);
    }
    const auto low = reconcile_b4_exact(1, 0, 1e-4);
    CHECK(std::abs(low.oracle - 1.5) < 1e-3);
}

TEST_CASE("series branches satisfy the radial systems") {
    for (auto spec : {RadialSystemSpec{RadialDomain::B2, 0, 0, 2.0, false},
                      RadialSystemSpec{RadialDomain::B2, 3, 0, 5.0, true},
                      RadialSystemSpec{RadialDomain::B2, 10, 0, 5.0, false},
                      RadialSystemSpec{RadialDomain::B4Exact, 3, 1, 2.0, false},
                      RadialSystemSpec{RadialDomain::B4Coexact, 2, 2, 1.0, true}}) {
        const auto [z, w] = series_solve(spec, 200);
        CHECK(ode_residual(z, spec, kR) < 1e-10);
        if (!w.coeffs_P.empty() || !w.coeffs_Q.empty()) CHECK(ode_residual(w, spec, kR) < 1e-10);
        CHECK(ode_residual(oracle_solution(spec), spec, kR) < 1e-10);
    }
}

TEST_CASE("oracle solution is normalized") {
    const RadialSystemSpec spec{RadialDomain::B2, 2, 0, 1.5, false};
    const auto v = evaluate(oracle_solution(spec), 1.0);
    CHECK(std::abs(v.P) < 1e-13);
    CHECK(v.Q == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(v.dQ == doctest::Approx(steklov_eigenvalue_oracle(spec)).epsilon(1e-15));
}

TEST_CASE("too few series terms are refused") {
    CHECK_THROWS_AS(series_solve({RadialDomain::B2, 1, 0, 1.0, false}, 10), InvalidArgument);
    CHECK_THROWS_AS(series_solve({RadialDomain::B2, 1, 0, 40.0, false}, 20), TruncationError);
}

TEST_CASE("closed-form profiles satisfy the radial systems") {
    for (int k = 1; k <= 6; ++k)
        for (bool conj : {false, true})
            for (double t : {0.0, 0.5, 2.0, 5.0}) {
                const RadialSystemSpec spec{RadialDomain::B2, k, 0, t, conj};
                CHECK(ode_residual(b2_closed_form_profile(k, t, conj), spec, kR) < 1e-9);
            }
    for (int k = 1; k <= 5; ++k)
        for (int p = 0; p <= k; ++p) {
            const RadialSystemSpec spec{RadialDomain::B4Coexact, k, p, 1.0, false};
            CHECK(ode_residual(b4_coexact_closed_form_profile(k, p, 1.0), spec, kR) < 1e-9);
        }
}

TEST_CASE("closed-form W-hat is a constant multiple of the series W-branch") {
    for (int k = 1; k <= 6; ++k)
        for (double t : {0.5, 2.0, 5.0})
            for (bool conj : {false, true}) {
                const auto w = series_solve({RadialDomain::B2, k, 0, t, conj}, 200).second;
                const double tau = conj ? -t : t;
                std::vector<double> ratio;
                for (double r : {0.2, 0.5, 0.8, 1.0}) {
                    const double x = tau * r * r;
                    const double closed =
                        -std::exp(0.5 * x) * specfun::exp_taylor_remainder(k, -x) / std::pow(r, 2 * k);
                    ratio.push_back(evaluate_scalar(w, r) / closed);
                }
                for (double q : ratio) CHECK(rel(q, ratio.back()) < 1e-9);
            }
}

TEST_CASE("Runge-Kutta integration reproduces the series at r = 1") {
    CHECK(rk_crosscheck({RadialDomain::B2, 1, 0, 1.0, true}) < 1e-8);
    CHECK(rk_crosscheck({RadialDomain::B2, 10, 0, 5.0, false}) < 1e-8);
    CHECK(rk_crosscheck({RadialDomain::B4Exact, 2, 1, 2.0, false}) < 1e-8);
    CHECK(rk_crosscheck({RadialDomain::B4Coexact, 3, 0, 1.0, true}) < 1e-8);
}

TEST_CASE("invalid radial specs are rejected") {
    CHECK_THROWS_AS(steklov_eigenvalue_oracle({RadialDomain::B2, -1, 0, 1.0, false}), InvalidArgument);
    CHECK_THROWS_AS(steklov_eigenvalue_oracle({RadialDomain::B4Exact, 2, 3, 1.0, false}), InvalidArgument);
    CHECK_THROWS_AS(steklov_eigenvalue_oracle({RadialDomain::B2, 1, 0, -1.0, false}), InvalidArgument);
}
