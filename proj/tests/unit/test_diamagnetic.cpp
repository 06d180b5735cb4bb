#include <cmath>

#include "doctest.h"
#include "magsteklov/diamagnetic.hpp"
#include "magsteklov/error.hpp"
#include "magsteklov/figures.hpp"

using namespace magsteklov;

TEST_CASE("bound coefficients on B^2 and B^4") {
    const auto b2 = bound_coefficients_b2n(1);
    CHECK(b2.sigma0 == doctest::Approx(2.0));
    CHECK(b2.interior_norm / b2.boundary_norm == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(b2.c1 == doctest::Approx(-2.0 / 3.0).epsilon(1e-13));
    CHECK(b2.c2 == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    const auto b4 = bound_coefficients_b2n(2);
    CHECK(b4.sigma0 == doctest::Approx(1.5));
    CHECK(b4.interior_norm / b4.boundary_norm == doctest::Approx(7.0 / 32.0).epsilon(1e-13));
    CHECK(b4.c1 < 0.0);
}

TEST_CASE("bound at t = 0 is sigma0") {
    for (int n : {1, 2}) CHECK(bound_curve(n, {0.0}).front().bound == bound_coefficients_b2n(n).sigma0);
}

TEST_CASE("B^2 first eigenvalue is below 2 on (0, 5] and under the bound on (0, 0.5]") {
    const auto rep = check_violation(Domain::B2, linspace(0.1, 5.0, 50));
    for (const auto& r : rep.rows) CHECK(r.violated);
    const auto small = check_violation(Domain::B2, linspace(0.01, 0.5, 50));
    for (const auto& r : small.rows) CHECK(r.dominated);
    REQUIRE(rep.largest_violating_t);
    CHECK(*rep.largest_violating_t == 5.0);
}

TEST_CASE("t = 0 row has bound = actual = sigma0") {
    for (auto d : {Domain::B2, Domain::B4}) {
        const auto rep = check_violation(d, {0.0, 0.5}, 20);
        const auto& r = rep.rows.front();
        CHECK(r.bound == doctest::Approx(r.sigma0).epsilon(1e-15));
        CHECK(r.actual == doctest::Approx(r.sigma0).epsilon(1e-15));
        CHECK_FALSE(r.violated);
    }
}

TEST_CASE("B^4 violation and its crossing of 3/2") {
    const auto rep = check_violation(Domain::B4, linspace(0.05, 2.9, 30), 20);
    for (const auto& r : rep.rows) CHECK(r.violated);
    const auto small = check_violation(Domain::B4, linspace(0.01, 0.5, 20), 20);
    for (const auto& r : small.rows) CHECK(r.dominated);
    const auto cross = b4_branch_crossing();
    REQUIRE(cross);
    CHECK(std::abs(*cross - 2.99749924855118) < 1e-8);
}

TEST_CASE("violation grid must lie in [0, 12]") {
    CHECK_THROWS_AS(check_violation(Domain::B2, {13.0}), InvalidArgument);
    CHECK_THROWS_AS(check_violation(Domain::S3, {1.0}), InvalidArgument);
}
