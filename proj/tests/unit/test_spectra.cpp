#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "magsteklov/error.hpp"
#include "magsteklov/spectra.hpp"

using namespace magsteklov;

namespace {
double rel(double v, double ref) { return std::abs(v - ref) / std::abs(ref); }
MagneticParameter T(double t) { return MagneticParameter(t); }
}  // namespace

TEST_CASE("magnetic parameter rejects negative and non-finite values") {
    CHECK_THROWS_AS(MagneticParameter(-1e-3), InvalidArgument);
    CHECK_THROWS_AS(MagneticParameter{std::nan("")}, InvalidArgument);
    CHECK_THROWS_AS(MagneticParameter{HUGE_VAL}, InvalidArgument);
    CHECK(MagneticParameter(0.0).value() == 0.0);
}

TEST_CASE("domain and family names round-trip") {
    for (auto d : {Domain::S1, Domain::S3, Domain::B2, Domain::B4}) CHECK(parse_domain(to_string(d)) == d);
    for (int i = 0; i <= int(Family::B4CoexactMinus); ++i) CHECK(parse_family(to_string(Family(i))) == Family(i));
    CHECK_THROWS_AS(parse_domain("s2"), InvalidArgument);
}

TEST_CASE("S1 spectrum") {
    const auto s = s1_hodge_spectrum(T(0.0), 2, 1);
    std::vector<double> v;
    for (const auto& r : s.records) v.push_back(r.value);
    CHECK(v == std::vector<double>{0, 1, 1, 4, 4});
    for (int k = 1; k <= 10; ++k) {
        const auto z = s1_hodge_spectrum(T(k), k, 0);
        CHECK(z.records.front().value == 0.0);
        CHECK(z.records.front().mode.sign == -1);
    }
    CHECK(s1_hodge_spectrum(T(0.3), 0, 0).records.front().value == doctest::Approx(0.09));
}

TEST_CASE("S3 zero modes on the co-exact minus branch") {
    for (int k = 1; k <= 10; ++k) CHECK(std::abs(s3_coexact_eigenvalue(k, 0, Sign::Minus, T(k + 1.0))) <= 1e-12);
    const auto s = spectrum(Domain::S3, T(2.0), 1);
    CHECK(s.records.front().value == 0.0);
}

TEST_CASE("S3 values at t = 0 and near it") {
    for (int k = 1; k <= 6; ++k)
        for (int p = 0; p <= k; ++p) {
            CHECK(s3_exact_eigenvalue(k, p, T(0.0)) == k * (k + 2));
            CHECK(s3_coexact_eigenvalue(k, p, Sign::Plus, T(0.0)) == (k + 1) * (k + 1));
            CHECK(rel(s3_exact_eigenvalue(k, p, T(1e-4)), k * (k + 2)) < 1e-3);
            CHECK(rel(s3_coexact_eigenvalue(k, p, Sign::Minus, T(1e-4)), (k + 1) * (k + 1)) < 1e-3);
        }
    CHECK(s3_first_eigenvalue(T(0.0)).value == 3.0);
    CHECK(s3_first_eigenvalue(T(0.5)).value == doctest::Approx(2.25));
}

TEST_CASE("S3 function eigenvalues are symmetric under p -> k-p with the linear term negated") {
    for (int k = 0; k <= 8; ++k)
        for (double t : {0.3, 1.0, 2.7}) {
            std::vector<double> a, b;
            for (int p = 0; p <= k; ++p) {
                a.push_back(s3_function_eigenvalue(k, p, T(t)));
                b.push_back(k * (k + 2.0) - 2.0 * (2 * p - k) * t + t * t);
            }
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-14));
        }
}

TEST_CASE("S3 function multiplicities are flagged per-p shares of (k+1)^2") {
    const auto s = s3_function_spectrum(T(0.7), 4);
    for (int k = 0; k <= 4; ++k) {
        int total = 0;
        for (const auto& r : s.records)
            if (r.mode.k == k) {
                CHECK(r.multiplicity_flagged);
                total += *r.multiplicity;
            }
        CHECK(total == (k + 1) * (k + 1));
    }
}

TEST_CASE("B2 reference values") {
    CHECK(rel(b2_steklov_eigenvalue(1, Family::B2Plus, T(1.0)), 1.392211191177332814376553) < 1e-14);
    CHECK(rel(b2_steklov_eigenvalue(0, Family::B2KZero, T(2.0)), 2.626070570998662607) < 1e-14);
    CHECK(b2_steklov_eigenvalue(0, Family::B2KZero, T(0.0)) == 2.0);
    for (int k = 1; k <= 10; ++k) {
        CHECK(b2_steklov_eigenvalue(k, Family::B2Plus, T(0.0)) == k + 1.0);
        CHECK(rel(b2_steklov_eigenvalue(k, Family::B2Minus, T(1e-4)), k + 1.0) < 1e-3);
        CHECK(rel(b2_steklov_eigenvalue(k, Family::B2Plus, T(1e-4)), k + 1.0) < 1e-3);
    }
    CHECK(rel(b2_steklov_eigenvalue(0, Family::B2KZero, T(1e-4)), 2.0) < 1e-3);
    CHECK_THROWS_AS(b2_steklov_eigenvalue(0, Family::B2Plus, T(1.0)), InvalidArgument);
}

TEST_CASE("B2 first eigenvalue is t^2/(e^t-1-t)") {
    for (double t : {0.1, 0.5, 1.0, 3.0, 5.0}) {
        const auto f = first_eigenvalue(Domain::B2, T(t), 30);
        CHECK(rel(f.value, t * t / (std::expm1(t) - t)) < 1e-13);
        CHECK(f.mode.k == 1);
        CHECK(f.mode.family == Family::B2Plus);
    }
}

TEST_CASE("B2 eigenvalues are positive") {
    for (double t = 0.5; t <= 50.0; t += 0.5) {
        const auto s = b2_steklov_spectrum(T(t), 30);
        for (const auto& r : s.records) CHECK(r.value > 0.0);
    }
}

TEST_CASE("B4 reference values") {
    CHECK(rel(b4_steklov_exact(1, 0, T(1e-4)), 1.49995625117188769530029) < 1e-12);
    CHECK(rel(b4_steklov_exact(1, 0, T(1.0)), 1.191974582329047038212605) < 1e-12);
    CHECK(rel(b4_steklov_exact(2, 1, T(0.5)), 2.694381378570353094863885) < 1e-12);
    CHECK(rel(b4_steklov_exact(2, 2, T(0.5)), 2.972049501497305340501818) < 1e-12);
    CHECK(rel(b4_steklov_coexact(1, 0, Sign::Minus, T(0.25)), 2.00780741869886435164723) < 1e-12);
    CHECK(rel(b4_steklov_coexact(1, 0, Sign::Minus, T(0.5)), 2.031168936364139270057274) < 1e-12);
    CHECK(rel(b4_steklov_coexact(1, 1, Sign::Plus, T(1e-4)), 2.000000001249999999869792) < 1e-12);
    CHECK(rel(b4_steklov_coexact(3, 2, Sign::Minus, T(2.0)), 5.047330951662873159684362) < 1e-12);
}

TEST_CASE("B4 printed exact forms agree away from poles") {
    for (int k = 1; k <= 4; ++k)
        for (int p = 0; p <= k; ++p)
            for (double t : {0.25, 1.0, 2.0}) {
                const double a = b4_steklov_exact(k, p, T(t), B4ExactVariant::TheoremStatement);
                const double b = b4_steklov_exact(k, p, T(t), B4ExactVariant::ProofQPrime);
                CHECK(rel(a, b) < 1e-10);
            }
}

TEST_CASE("B4 lowest eigenvalue near t = 0") {
    const auto low = b4_lowest_eigenvalue(T(1e-4), 10);
    CHECK(std::abs(low.branch - 1.5) < 1e-2);
    CHECK(std::abs(low.enumerated.value - 1.5) < 1e-2);
    CHECK(low.printed.has_value());
    // The printed expression leaves the branch as t grows.
    CHECK(std::abs(*b4_lowest_eigenvalue(T(1.0), 10).printed - 1.191974582329047) > 0.1);
}

TEST_CASE("first eigenvalue equals the minimum of the enumeration") {
    for (auto d : {Domain::S1, Domain::S3, Domain::B2, Domain::B4})
        for (double t : {0.0, 0.7, 2.5}) {
            const auto s = spectrum(d, T(t), 12);
            CHECK(std::is_sorted(s.records.begin(), s.records.end(),
                                 [](const auto& a, const auto& b) { return a.value < b.value; }));
            double mn = INFINITY;
            for (const auto& r : s.records) mn = std::min(mn, r.value);
            CHECK(first_eigenvalue(d, T(t), 12).value == mn);
        }
}

TEST_CASE("first eigenvalue refuses a cutoff at the minimizer") {
    CHECK_THROWS_AS(first_eigenvalue(Domain::S3, T(10.0), 3), CutoffInsufficient);
    CHECK_NOTHROW(first_eigenvalue(Domain::S3, T(10.0), 50));
}

TEST_CASE("enumerations reject bad cutoffs") {
    CHECK_THROWS_AS(s3_oneform_spectrum(T(1.0), 0), InvalidArgument);
    CHECK_THROWS_AS(b4_steklov_spectrum(T(1.0), 0), InvalidArgument);
    CHECK_THROWS_AS(s3_exact_eigenvalue(2, 3, T(1.0)), InvalidArgument);
}
