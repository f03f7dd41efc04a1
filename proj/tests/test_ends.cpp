#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cmc1/catalog.hpp"
#include "cmc1/ends.hpp"
#include "support/testrng.hpp"

using namespace cmc1;

TEST_CASE("end classification of the catalog cases") {
    // G = z, omega = 2 z^{-2}: q2 = 2, m = 3, catenoid type, not embedded
    const EndData uy = classify_end(1.0, -2.0, Cplx(2.0, 0.0));
    CHECK(uy.type == EndType::catenoid_cousin_type);
    CHECK(uy.m1 == 3);
    CHECK(uy.m2 == 3);
    CHECK(uy.m == 3);
    CHECK(!uy.embedded);
    CHECK(uy.ord_Q == -2);

    // horosphere-type end
    const EndData horo = classify_end(2.0, -2.0, Cplx(0.0, 0.0));
    CHECK(horo.type == EndType::horosphere_type);
    CHECK(horo.m1 == 1);
    CHECK(horo.m2 == 3);
    CHECK(horo.m == 1);
    CHECK(horo.embedded);
    CHECK(horo.m2 - horo.m1 == 2 * (horo.ord_Q + 2));

    // irregular end
    CHECK_THROWS_AS(classify_end(1.0, -3.0, Cplx(1.0, 0.0)), end_classification_error);

    // embedded catenoid cousin: q2 = (1 - mu^2)/4
    const EndData cat = classify_end(0.5, -1.5, Cplx(0.1875, 0.0));
    CHECK(cat.m == 1);
    CHECK(cat.embedded);
}

TEST_CASE("classification rejects non-integer indicial gaps") {
    CHECK_THROWS_WITH_AS(classify_end(0.5, -1.5, Cplx(0.3, 0.0)),
                         doctest::Contains("not a positive integer"), end_classification_error);
    // inconsistent q2 for a horosphere-type order
    CHECK_THROWS_AS(classify_end(2.0, -2.0, Cplx(0.5, 0.0)), std::invalid_argument);
    // mu = m degeneracy
    CHECK_THROWS_AS(classify_end(1.0, -2.0, Cplx(0.0, 0.0)), std::invalid_argument);
}

TEST_CASE("indicial roots satisfy their polynomial") {
    testsupport::Rng rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const double nu = rng.uniform(-4.0, -1.0);
        const Cplx q2(rng.uniform(-2.0, 3.0), 0.0);
        for (const Cplx& t : indicial_roots(nu, q2)) {
            const Cplx res = t * t - (nu + 1.0) * t - q2;
            CHECK(std::abs(res) < 1e-10);
        }
    }
}

TEST_CASE("m equals m1 on valid ends") {
    const EndData a = classify_end(1.0, -2.0, Cplx(2.0, 0.0));
    CHECK(a.m == a.m1);
    const EndData b = classify_end(2.0, -2.0, Cplx(0.0, 0.0));
    CHECK(b.m == b.m1);
    const EndData c = classify_end(0.5, -1.5, Cplx(0.1875, 0.0));
    CHECK(c.m == c.m1);
    const EndData d = classify_end(3.0, -2.0, Cplx(0.0, 0.0));
    CHECK(d.m == d.m1);
}

TEST_CASE("frame asymptote matrix entries") {
    // catenoid type with mu = 2, m = 1: q2 = (1 - 4)/4 = -0.75
    const EndData e = classify_end(2.0, -3.0, Cplx(-0.75, 0.0));
    REQUIRE(e.m == 1);
    const Mat2c F = frame_asymptote(e, {Cplx(1.0, 0.0), 0});
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(F.a - Cplx(1.5 * s)) < 1e-12);
    CHECK(std::abs(F.b - Cplx(0.5 * s)) < 1e-12);
    CHECK(std::abs(F.c - Cplx(0.5 * s)) < 1e-12);
    CHECK(std::abs(F.d - Cplx(1.5 * s)) < 1e-12);

    // determinant 1 along a ray
    for (double r : {0.1, 0.4, 0.9}) {
        const Mat2c Fr = frame_asymptote(e, {Cplx(r, 0.0), 0});
        CHECK(std::abs(Fr.det() - Cplx(1.0)) < 1e-12);
    }

    // horosphere type: diagonal tends to 1
    const EndData h = classify_end(2.0, -2.0, Cplx(0.0, 0.0));
    const Mat2c Fh = frame_asymptote(h, {Cplx(0.01, 0.0), 0});
    CHECK(std::abs(Fh.a - Cplx(1.0)) < 1e-12);
    CHECK(std::abs(Fh.d - Cplx(1.0)) < 1e-12);
}

TEST_CASE("asymptotic graph forms") {
    // horosphere-type end with m = 1: (Re z, Im z, |z|^2)
    const EndData h = classify_end(2.0, -2.0, Cplx(0.0, 0.0));
    const GraphPoint g = asymptotic_graph(h, Cplx(0.1, 0.05));
    CHECK(g.x[0] == doctest::Approx(0.1));
    CHECK(g.x[1] == doctest::Approx(0.05));
    CHECK(g.x[2] == doctest::Approx(0.0125));

    // correction exponents
    CHECK(classify_end(0.3, -1.3, Cplx(0.25 * (1.0 - 0.09), 0.0)).correction_exponent ==
          doctest::Approx(0.6));
    CHECK(classify_end(2.0, -3.0, Cplx(-0.75, 0.0)).correction_exponent == doctest::Approx(1.0));
}

TEST_CASE("pure power dual frame solves its linear system") {
    // d(F^{-1}) = F^{-1} [[G, -G^2],[1, -G]] omega dz for G = z^mu,
    // omega = (q2/mu) z^{-1-mu}; checked by differencing along a ray
    testsupport::Rng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const double mu = rng.uniform(0.3, 2.5);
        const double q2 = rng.uniform(-mu * mu / 4.0 + 0.05, 2.0);
        const double r = rng.uniform(0.3, 1.5);
        const double th = rng.uniform(-2.0, 2.0);
        const BranchedPoint z{std::polar(r, th), 0};
        const double h = 1e-6 * r;

        const Mat2c F = pure_power_dual_frame(mu, q2, z);
        CHECK(std::abs(F.det() - Cplx(1.0)) < 1e-12);

        const Cplx dz = std::polar(h, th);
        const Mat2c Fp = pure_power_dual_frame(mu, q2, branch_continue(z, z.z + dz));
        const Mat2c Fm = pure_power_dual_frame(mu, q2, branch_continue(z, z.z - dz));
        const Mat2c dF = (1.0 / (2.0 * h)) * (Fp - Fm);  // d/d|z| along the ray

        const Cplx G = cpow(z, mu);
        const Cplx w = (q2 / mu) * cpow(z, -1.0 - mu);
        const Mat2c gen{w * G, -w * G * G, w, -w * G};
        const Cplx raydir = std::polar(1.0, th);
        const Mat2c expected = raydir * (F * gen);
        CHECK(max_abs_diff(dF, expected) < 1e-5 * std::max(1.0, expected.max_abs()));
    }
}
