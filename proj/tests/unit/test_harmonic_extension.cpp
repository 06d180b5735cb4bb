#include <cmath>

#include "doctest.h"
#include "magsteklov/error.hpp"
#include "magsteklov/harmonic_extension.hpp"

using namespace magsteklov;

TEST_CASE("harmonic extension audit passes for n = 1 and n = 2") {
    for (int n : {1, 2}) {
        const auto rep = verify_harmonic_extension_b2n(n, 1e-5, random_interior_points(n, 20, 99 + n));
        CAPTURE(n);
        CHECK(rep.points == 20);
        CHECK(rep.laplacian_residual < 1e-6);
        CHECK(rep.lie_residual < 1e-6);
        CHECK(rep.eta_phi_residual < 1e-6);
        CHECK(rep.im_ratio_residual < 1e-6);
        CHECK(rep.pass);
    }
}

TEST_CASE("random interior points stay in the shell") {
    for (const auto& p : random_interior_points(2, 50, 3)) {
        double r2 = 0.0;
        for (double v : p) r2 += v * v;
        CHECK(std::sqrt(r2) > 0.05);
        CHECK(std::sqrt(r2) < 0.95);
    }
}

TEST_CASE("audit rejects points too close to the centre or the boundary") {
    CHECK_THROWS_AS(verify_harmonic_extension_b2n(1, 1e-5, {Point{0.0, 0.0}}), InvalidArgument);
    CHECK_THROWS_AS(verify_harmonic_extension_b2n(1, 1e-5, {Point{1.0, 0.0}}), InvalidArgument);
    CHECK_THROWS_AS(harmonic_extension_b2n(2, 0, Point{0.1, 0.2}), InvalidArgument);
}

TEST_CASE("a tolerance tighter than finite differences can deliver makes the audit fail") {
    const auto rep = verify_harmonic_extension_b2n(2, 1e-5, random_interior_points(2, 20, 1), 1e-15);
    CHECK_FALSE(rep.pass);
}
