#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cmc1/catalog.hpp"
#include "cmc1/weierstrass.hpp"
#include "support/testrng.hpp"

using namespace cmc1;

namespace {

Path straight_from_origin(const Cplx& z) { return make_segment(Cplx(0.0, 0.0), z); }

}  // namespace

TEST_CASE("horosphere frame matches the closed form") {
    const CatalogSurface horo = catalog_horosphere();
    testsupport::Rng rng(21);
    for (int trial = 0; trial < 12; ++trial) {
        const Cplx z(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        if (std::abs(z) < 1e-3) continue;
        const Frame f = integrate_frame(*horo.data, straight_from_origin(z));
        CHECK(max_abs_diff(f.F, horo.closed_frame(z)) < 1e-9);
    }
}

TEST_CASE("enneper cousin frame matches the closed form") {
    const CatalogSurface enneper = catalog_enneper_cousin(1);
    testsupport::Rng rng(22);
    for (int trial = 0; trial < 12; ++trial) {
        const Cplx z(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        if (std::abs(z) < 1e-3) continue;
        const Frame f = integrate_frame(*enneper.data, straight_from_origin(z));
        CHECK(max_abs_diff(f.F, enneper.closed_frame(z)) < 1e-9);
    }
}

TEST_CASE("trivial path gives the identity frame") {
    const CatalogSurface horo = catalog_horosphere();
    Path p;
    p.points = {Cplx(0.0, 0.0)};
    const Frame f = integrate_frame(generator_from_data(*horo.data), p);
    CHECK(max_abs_diff(f.F, Mat2c::identity()) == 0.0);
    CHECK(std::abs(f.F.det() - Cplx(1.0)) == 0.0);
}

TEST_CASE("det F stays on SL(2,C) along integration") {
    const CatalogSurface enneper = catalog_enneper_cousin(2);
    const Frame f = integrate_frame(*enneper.data, straight_from_origin(Cplx(0.9, 0.7)));
    CHECK(std::abs(f.F.det() - Cplx(1.0)) < 1e-12);
    CHECK(f.det_drift < 1e-10 * std::abs(Cplx(0.9, 0.7)) + 1e-12);
}

TEST_CASE("integrator convergence order matches RK4") {
    const CatalogSurface enneper = catalog_enneper_cousin(1);
    const Cplx z(0.6, 0.8);  // |z| = 1, split by refinement into 0.25 pieces
    const Mat2c exact = enneper.closed_frame(z);
    std::vector<double> errs;
    // exact divisors of the refined segment length so the effective step
    // really halves
    for (double h : {0.125, 0.0625, 0.03125}) {
        IntegrateOptions opts;
        opts.fixed_step = h;
        const Frame f = integrate_frame(generator_from_data(*enneper.data),
                                        straight_from_origin(z), opts);
        errs.push_back(max_abs_diff(f.F, exact));
    }
    const double slope = std::log(errs.front() / errs.back()) / std::log(4.0);
    CHECK(slope == doctest::Approx(4.0).epsilon(0.10));
}

TEST_CASE("minimal immersion closed forms") {
    WeierstrassData flat;
    flat.f = holo_const(Cplx(1.0, 0.0));
    flat.g = holo_const(Cplx(0.0, 0.0));
    flat.z0 = Cplx(0.0, 0.0);
    const auto x = minimal_immersion(flat, straight_from_origin(Cplx(1.0, 0.0)));
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(x[1]) < 1e-10);
    CHECK(std::abs(x[2]) < 1e-10);

    // trivial path
    Path trivial;
    trivial.points = {Cplx(0.0, 0.0)};
    const auto zero = minimal_immersion(flat, trivial);
    CHECK(zero == std::array<double, 3>{0.0, 0.0, 0.0});

    WeierstrassData enneper;
    enneper.f = holo_const(Cplx(1.0, 0.0));
    enneper.g = holo_monomial(Cplx(1.0, 0.0), 1);
    enneper.z0 = Cplx(0.0, 0.0);
    for (double t : {0.3, 0.8, 1.4}) {
        const auto p = minimal_immersion(enneper, straight_from_origin(Cplx(t, 0.0)));
        CHECK(p[2] == doctest::Approx(t * t).epsilon(1e-9));
    }
}

TEST_CASE("immerse model conversions") {
    Frame id;
    const AmbientPoint up = immerse(id, 1.0, AmbientModel::upper_half);
    CHECK(up.x == std::array<double, 3>{0.0, 0.0, 1.0});
    const AmbientPoint ball = immerse(id, 1.0, AmbientModel::poincare_ball);
    CHECK(std::abs(ball.x[0]) < 1e-15);
    CHECK(std::abs(ball.x[1]) < 1e-15);
    CHECK(std::abs(ball.x[2]) < 1e-15);

    // horosphere frame at z = 1
    const CatalogSurface horo = catalog_horosphere();
    Frame f;
    f.F = horo.closed_frame(Cplx(1.0, 0.0));
    const AmbientPoint p = immerse(f, 1.0, AmbientModel::upper_half);
    CHECK(p.x[2] == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("hermitian points are positive definite with det 1/c^2") {
    const CatalogSurface enneper = catalog_enneper_cousin(1);
    testsupport::Rng rng(23);
    for (int trial = 0; trial < 8; ++trial) {
        const Cplx z(rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9));
        Frame f = integrate_frame(*enneper.data, straight_from_origin(z));
        for (double c : {1.0, 2.0}) {
            const AmbientPoint h = immerse(f, c, AmbientModel::hermitian);
            CHECK(std::abs(h.hermitian.det() - Cplx(1.0 / (c * c))) < 1e-8);
            CHECK(h.hermitian.a.real() > 0.0);
            CHECK(std::abs(h.hermitian.b - std::conj(h.hermitian.c)) < 1e-12);
        }
    }
}

TEST_CASE("upper half and ball models round trip") {
    testsupport::Rng rng(24);
    for (int trial = 0; trial < 50; ++trial) {
        const std::array<double, 3> u{rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0),
                                      rng.uniform(0.05, 5.0)};
        const auto b = upper_half_to_ball(u);
        CHECK(b[0] * b[0] + b[1] * b[1] + b[2] * b[2] < 1.0);
        const auto u2 = ball_to_upper_half(b);
        for (int k = 0; k < 3; ++k) CHECK(u[k] == doctest::Approx(u2[k]).epsilon(1e-12));
    }
}

TEST_CASE("secondary Gauss map of the catalog surfaces") {
    const CatalogSurface horo = catalog_horosphere();
    const CatalogSurface enneper = catalog_enneper_cousin(1);
    testsupport::Rng rng(25);
    for (int trial = 0; trial < 10; ++trial) {
        const Cplx z(rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9));
        Frame fh = integrate_frame(*horo.data, straight_from_origin(z));
        CHECK(std::abs(secondary_gauss(*horo.data, fh) - Cplx(1.0)) < 1e-8);

        Frame fe = integrate_frame(*enneper.data, straight_from_origin(z));
        CHECK(std::abs(secondary_gauss(*enneper.data, fe) - std::tanh(z)) < 1e-8);
    }
    // at the basepoint, tanh 0 = 0
    Frame f0 = integrate_frame(*enneper.data, make_segment(Cplx(0.0, 0.0), Cplx(1e-12, 0.0)));
    CHECK(std::abs(secondary_gauss(*enneper.data, f0)) < 1e-10);
}

TEST_CASE("su2 action") {
    SU2Matrix id;
    CHECK(su2_action(id, Cplx(0.3, 0.4)).value == Cplx(0.3, 0.4));

    SU2Matrix quarter;
    quarter.b11 = std::polar(1.0, kPi / 2.0);
    const SpherePoint rot = su2_action(quarter, Cplx(1.0, 0.0));
    CHECK(std::abs(rot.value - Cplx(-1.0, 0.0)) < 1e-14);

    SU2Matrix flip;
    flip.b11 = Cplx(0.0, 0.0);
    flip.b12 = Cplx(1.0, 0.0);
    CHECK(su2_action(flip, Cplx(0.0, 0.0)).at_infinity);
}

TEST_CASE("monodromy of entire data is trivial") {
    const CatalogSurface horo = catalog_horosphere();
    const CatalogSurface enneper = catalog_enneper_cousin(1);
    for (const CatalogSurface* s : {&horo, &enneper}) {
        const Path loop = make_circle(Cplx(0.3, 0.1), 0.8, 48);
        const MonodromyResult r = monodromy(*s->data, loop);
        CHECK(r.in_su2);
        CHECK(max_abs_diff(r.B, Mat2c::identity()) < 1e-8);
    }
}

TEST_CASE("monodromy is homotopy invariant for branched dual data") {
    const CatalogSurface cat = catalog_catenoid_cousin(0.5);
    const FrameGenerator gen = generator_from_dual(cat.dual->G, cat.dual->omega);

    // same homotopy class, same basepoint z = 2: a circle and a square
    Path square;
    square.closed = true;
    square.points = {Cplx(2.0, 0.0), Cplx(0.0, 2.0), Cplx(-2.0, 0.0), Cplx(0.0, -2.0),
                     Cplx(2.0, 0.0)};
    const Path circle = make_circle(Cplx(0.0, 0.0), 2.0, 64);

    const MonodromyResult a = monodromy_from_generator(gen, circle);
    const MonodromyResult b = monodromy_from_generator(gen, square);
    CHECK(max_abs_diff(a.B, b.B) < 1e-6);
}

TEST_CASE("dual catenoid monodromy is the expected unitary diagonal") {
    // continuing the pure-power inverse frame once around the puncture
    // multiplies its columns by e^{+- i pi (m - mu)} (integer m makes both
    // column factors consistent), so the identity-based monodromy is
    // diag(e^{i pi (m - mu)}, e^{-i pi (m - mu)})
    for (double mu : {0.5, 2.5}) {
        const CatalogSurface cat = catalog_catenoid_cousin(mu);
        const FrameGenerator gen = generator_from_dual(cat.dual->G, cat.dual->omega);
        const MonodromyResult r = monodromy_from_generator(gen, make_circle(Cplx(0.0, 0.0), 1.0, 64));
        CHECK(r.in_su2);
        const Cplx expect = std::exp(Cplx(0.0, kPi * (1.0 - mu)));  // m = 1
        CHECK(std::abs(r.B.a - expect) < 1e-8);
        CHECK(std::abs(r.B.d - std::conj(expect)) < 1e-8);
        CHECK(std::abs(r.B.b) < 1e-8);
        CHECK(std::abs(r.B.c) < 1e-8);
    }
}

TEST_CASE("zmu loop action realizes the analytic continuation of z^mu") {
    testsupport::Rng rng(26);
    for (int trial = 0; trial < 20; ++trial) {
        const double mu = rng.uniform(0.2, 2.8);
        const Cplx z = std::polar(rng.uniform(0.3, 2.0), rng.uniform(-3.0, 3.0));
        const Cplx g0 = cpow({z, 0}, mu);
        const Cplx g1 = cpow({z, 1}, mu);
        const SpherePoint moved = su2_action(zmu_loop_action(mu), g0);
        REQUIRE(!moved.at_infinity);
        CHECK(std::abs(moved.value - g1) <= 1e-6 * std::abs(g1));
        CHECK(zmu_loop_action(mu).norm_defect() < 1e-12);
    }
}

TEST_CASE("integration error paths") {
    // step through a pole of the generator
    WeierstrassData polar;
    polar.f = holo_monomial(Cplx(1.0, 0.0), -2);
    polar.g = holo_monomial(Cplx(1.0, 0.0), 1);
    polar.z0 = Cplx(1.0, 0.0);
    polar.punctures = {Cplx(0.0, 0.0)};
    const Path through = make_segment(Cplx(1.0, 0.0), Cplx(-1.0, 0.0));
    CHECK_THROWS_AS(integrate_frame(generator_from_data(polar), through), std::domain_error);
    CHECK_THROWS_AS(minimal_immersion(polar, through), std::domain_error);

    // non-convergence when the subdivision budget is exhausted near a pole
    IntegrateOptions tight;
    tight.max_subdivisions = 3;
    const Path near_pole = make_segment(Cplx(1.0, 0.0), Cplx(1e-7, 0.0));
    CHECK_THROWS_AS(integrate_frame(generator_from_data(polar), near_pole, tight),
                    tolerance_error);
}

TEST_CASE("data compatibility bookkeeping") {
    WeierstrassData ok;
    ok.f = holo_monomial(Cplx(1.0, 0.0), 2);  // zero of order 2 at the pole of g
    ok.g = holo_monomial(Cplx(1.0, 0.0), -1);
    CHECK_NOTHROW(check_data_compatibility(ok));

    WeierstrassData bad;
    bad.f = holo_const(Cplx(1.0, 0.0));
    bad.g = holo_monomial(Cplx(1.0, 0.0), -1);
    CHECK_THROWS_AS(check_data_compatibility(bad), std::invalid_argument);

    WeierstrassData spurious;
    spurious.f = holo_monomial(Cplx(1.0, 0.0), 2);  // zero without a matching pole
    spurious.g = holo_monomial(Cplx(1.0, 0.0), 1);
    CHECK_THROWS_AS(check_data_compatibility(spurious), std::invalid_argument);
}

TEST_CASE("degenerate immersion point is rejected") {
    // |C|^2 + |D|^2 = 0 cannot happen on SL(2,C); a rank-deficient matrix
    // trips the guard
    CHECK_THROWS_AS(immerse_inverse({Cplx(1.0), Cplx(1.0), Cplx(0.0), Cplx(0.0)}, 1.0,
                                    AmbientModel::upper_half),
                    std::domain_error);
}

TEST_CASE("open path is rejected by monodromy") {
    const CatalogSurface horo = catalog_horosphere();
    Path open_path = make_segment(Cplx(0.0, 0.0), Cplx(1.0, 0.0));
    CHECK_THROWS_AS(monodromy(*horo.data, open_path), std::invalid_argument);
}
