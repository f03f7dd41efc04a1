#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cmc1/index_report.hpp"
#include "cmc1/spectral_oracle.hpp"

using namespace cmc1;

TEST_CASE("index interval") {
    const IndexReport five = index_interval(5, false);
    CHECK(five.ind_u == 5);
    CHECK(five.lo == 4);
    CHECK(five.hi == 5);

    const IndexReport pinned = index_interval(1, false);
    CHECK(pinned.lo == 1);
    CHECK(pinned.hi == 1);
    CHECK(pinned.flags.stable_excluded);

    const IndexReport horo = index_interval(7, true);
    CHECK(horo.lo == 0);
    CHECK(horo.hi == 0);
    CHECK(horo.flags.horosphere);

    CHECK_THROWS_AS(index_interval(-1, false), std::invalid_argument);

    const IndexReport collapsed = index_interval(5, false, true);
    CHECK(collapsed.lo == collapsed.hi);
}

TEST_CASE("vision bound") {
    for (int k = 1; k <= 5; ++k) CHECK(vision_bound(2 * k + 2, 2 * k + 2) == 2 * k);
    for (int n = 4; n <= 8; n += 2) CHECK(vision_bound(n - 1, n - 2) == n - 3);
    CHECK(vision_bound(1, 1) == 0);
    CHECK_THROWS_AS(vision_bound(1, 2), std::invalid_argument);
}

TEST_CASE("deformation bound") {
    for (int n = 3; n <= 8; ++n) CHECK(deformation_bound(2 * n - 3) == 2 * n - 4);
    for (int k = 1; k <= 5; ++k) CHECK(deformation_bound(2 * k + 3) == 2 * k + 2);
    CHECK(deformation_bound(1) == 0);
}

TEST_CASE("lower bounds merge and inconsistency flag") {
    IndexReport r = index_interval(5, false);
    apply_lower_bound(r, {4, "vision"});
    CHECK(r.lo == 4);
    CHECK(!r.flags.inconsistent);
    apply_lower_bound(r, {7, "synthetic"});
    CHECK(r.flags.inconsistent);
    CHECK(r.lo <= r.hi);
}

TEST_CASE("catalog reports") {
    {
        CatalogQuery q{"catenoid-cousin", 0.5, 1, 3, 3, false};
        const IndexReport r = catalog_lookup(q);
        CHECK(r.lo == 1);
        CHECK(r.hi == 1);
        CHECK(r.nullity == 1);
    }
    {
        CatalogQuery q{"enneper-cousin", 0.0, 1, 3, 3, false};
        const IndexReport r = catalog_lookup(q);
        CHECK(r.lo == 1);
        CHECK(r.hi == 1);
    }
    {
        CatalogQuery q{"enneper-cousin", 0.0, 3, 3, 3, false};
        const IndexReport r = catalog_lookup(q);
        CHECK(r.lo == 2 * 3 - 2);
        CHECK(r.hi == 2 * 3 - 1);
    }
    {
        CatalogQuery q{"uy-power-gauss", 0.0, 1, 3, 4, false};
        const IndexReport r = catalog_lookup(q);
        CHECK(r.lo == 6);
        CHECK(r.hi == 7);
    }
    {
        CatalogQuery q{"uy-degree-one-gauss", 0.0, 1, 3, 3, false};
        const IndexReport r = catalog_lookup(q);
        CHECK(r.lo == 1);
        CHECK(r.hi == 1);
    }
    {
        CatalogQuery q{"horosphere", 0.0, 1, 3, 3, false};
        const IndexReport r = catalog_lookup(q);
        CHECK(r.hi == 0);
        CHECK(r.flags.horosphere);
    }
    {
        CatalogQuery q{"genus1-catenoid-cousin", 0.0, 1, 3, 3, false};
        const IndexReport r = catalog_lookup(q);
        CHECK(r.lo == 2);
    }
    {
        CatalogQuery q{"dual-enneper", 0.0, 1, 3, 3, false};
        const IndexReport r = catalog_lookup(q);
        CHECK(r.flags.infinite_index);
        CHECK(!r.flags.finite_total_curvature);
    }
    CatalogQuery bad{"unknown-surface", 0.0, 1, 3, 3, false};
    CHECK_THROWS_AS(catalog_lookup(bad), std::invalid_argument);
}

TEST_CASE("catalog catenoid sweep matches the analytic index") {
    for (int i = 1; i <= 49; ++i) {
        const double mu = 0.1 * i;
        if (std::abs(mu - std::nearbyint(mu)) < 1e-9) continue;
        CatalogQuery q{"catenoid-cousin", mu, 1, 3, 3, false};
        const IndexReport r = catalog_lookup(q);
        const int fl = static_cast<int>(std::floor(mu));
        CHECK(r.hi == 2 * fl + 1);
        CHECK(r.hi == analytic_index(mu).ind_u);
        if (mu > 1.0) CHECK(r.lo == 2 * fl);
        CHECK(!r.flags.inconsistent);
        CHECK(r.flags.finite_total_curvature);
    }
}

TEST_CASE("deformation family reports") {
    for (int n = 3; n <= 8; ++n) {
        CatalogQuery q0{"genus0-noid-cousin", 0.0, 1, n, 3, false};
        CHECK(catalog_lookup(q0).lo == 2 * n - 4);
        CatalogQuery q1{"genus1-noid-cousin", 0.0, 1, n, 3, false};
        CHECK(catalog_lookup(q1).lo == n - 2);
    }
    for (int k = 1; k <= 5; ++k) {
        CatalogQuery q{"costa-cousin", 0.0, k, 3, 3, false};
        const IndexReport r = catalog_lookup(q);
        CHECK(r.lo == 2 * k + 2);  // deformation beats the vision bound 2k
    }
}
