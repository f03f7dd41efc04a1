#include "cmc1/index_report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cmc1/spectral_oracle.hpp"

namespace cmc1 {

IndexReport index_interval(int ind_sigma, bool is_horosphere, bool addendum_mode) {
    if (ind_sigma < 0) throw std::invalid_argument("index_interval: negative index");
    IndexReport r;
    r.flags.addendum_mode = addendum_mode;
    if (is_horosphere) {
        r.flags.horosphere = true;
        r.ind_u = 0;
        r.lo = r.hi = 0;
        return r;
    }
    r.ind_u = ind_sigma;
    r.hi = ind_sigma;
    r.lo = std::max(ind_sigma - 1, 0);
    if (ind_sigma == 1) {
        // only the horosphere is stable, so index 0 is excluded
        r.lo = 1;
        r.flags.stable_excluded = true;
    }
    if (addendum_mode) r.lo = r.hi;
    return r;
}

int vision_bound(int v, int v_adj) {
    if (v_adj < 0 || v_adj > v) throw std::invalid_argument("vision_bound: need 0 <= v_adj <= v");
    const int b = (v_adj != v) ? v_adj - 1 : v_adj - 2;
    return std::max(b, 0);
}

int deformation_bound(int ind_minimal) {
    if (ind_minimal < 0) throw std::invalid_argument("deformation_bound: negative index");
    return std::max(ind_minimal - 1, 0);
}

void apply_lower_bound(IndexReport& report, const LowerBound& lb) {
    report.lower_bounds.push_back(lb);
    if (lb.value > report.hi) {
        report.flags.inconsistent = true;
        return;
    }
    report.lo = std::max(report.lo, lb.value);
}

namespace {

// greatest integer strictly less than mu
int floor_strict(double mu) {
    const int f = static_cast<int>(std::floor(mu));
    return (static_cast<double>(f) == mu) ? f - 1 : f;
}

}  // namespace

IndexReport catalog_lookup(const CatalogQuery& q) {
    if (q.name == "horosphere") {
        IndexReport r = index_interval(0, true, q.addendum_mode);
        r.name = q.name;
        r.nullity = 0;
        return r;
    }
    if (q.name == "catenoid-cousin") {
        if (q.mu <= 0.0 || q.mu == 1.0)
            throw std::invalid_argument("catalog_lookup: catenoid cousin needs mu > 0, mu != 1");
        const AnalyticIndex ai = analytic_index(make_zmu(q.mu));
        IndexReport r = index_interval(ai.ind_u, false, q.addendum_mode);
        r.name = q.name;
        r.nullity = ai.nullity;
        // interval {2 [mu], 2 [mu] + 1} with [mu] the greatest integer < mu
        if (r.lo != 2 * floor_strict(q.mu) && !r.flags.stable_excluded)
            throw std::logic_error("catalog_lookup: catenoid interval mismatch");
        return r;
    }
    if (q.name == "enneper-cousin") {
        if (q.k < 1) throw std::invalid_argument("catalog_lookup: enneper cousin needs k >= 1");
        const int ind_u = 2 * q.k - 1;
        IndexReport r = index_interval(ind_u, false, q.addendum_mode);
        r.name = q.name;
        return r;
    }
    if (q.name == "uy-power-gauss") {
        if (q.m < 3) throw std::invalid_argument("catalog_lookup: uy-power-gauss needs integer m >= 3");
        IndexReport r = index_interval(2 * q.m - 1, false, q.addendum_mode);
        r.name = q.name;
        return r;
    }
    if (q.name == "uy-degree-one-gauss") {
        IndexReport r = index_interval(1, false, q.addendum_mode);
        r.name = q.name;
        return r;
    }
    if (q.name == "genus1-catenoid-cousin") {
        // rotation about the end axis gives v = v_adj = 4
        IndexReport r;
        r.name = q.name;
        r.ind_u = -1;  // not computed from a spectrum
        r.hi = -1;
        r.lo = 0;
        r.lower_bounds.push_back({vision_bound(4, 4), "vision(rotation)"});
        r.lo = r.lower_bounds.back().value;
        return r;
    }
    if (q.name == "dual-enneper") {
        IndexReport r;
        r.name = q.name;
        r.flags.finite_total_curvature = false;
        r.flags.infinite_index = true;
        return r;
    }
    if (q.name == "costa-cousin") {
        if (q.k < 1) throw std::invalid_argument("catalog_lookup: costa cousin needs k >= 1");
        IndexReport r;
        r.name = q.name;
        r.ind_u = -1;
        r.hi = -1;
        r.lo = 0;
        r.lower_bounds.push_back({vision_bound(2 * q.k + 2, 2 * q.k + 2), "vision(rotation)"});
        if (q.k <= 37)
            r.lower_bounds.push_back({deformation_bound(2 * q.k + 3), "deformation"});
        for (const LowerBound& lb : r.lower_bounds) r.lo = std::max(r.lo, lb.value);
        return r;
    }
    if (q.name == "genus0-noid-cousin") {
        if (q.n < 3) throw std::invalid_argument("catalog_lookup: n-noid needs n >= 3");
        IndexReport r;
        r.name = q.name;
        r.ind_u = -1;
        r.hi = -1;
        r.lower_bounds.push_back({deformation_bound(2 * q.n - 3), "deformation"});
        r.lo = r.lower_bounds.back().value;
        return r;
    }
    if (q.name == "genus1-noid-cousin") {
        if (q.n < 3) throw std::invalid_argument("catalog_lookup: n-noid needs n >= 3");
        IndexReport r;
        r.name = q.name;
        r.ind_u = -1;
        r.hi = -1;
        const int vb = (q.n % 2 == 0) ? vision_bound(q.n - 1, q.n - 2) : vision_bound(q.n - 2, q.n - 3);
        r.lower_bounds.push_back({vb, "vision(translation)"});
        r.lower_bounds.push_back({deformation_bound(q.n - 1), "deformation"});
        r.lo = 0;
        for (const LowerBound& lb : r.lower_bounds) r.lo = std::max(r.lo, lb.value);
        return r;
    }
    throw std::invalid_argument("catalog_lookup: unknown name '" + q.name + "'");
}

}  // namespace cmc1
