#ifndef CMC1_INDEX_REPORT_HPP
#define CMC1_INDEX_REPORT_HPP

#include <string>
#include <vector>

namespace cmc1 {

struct LowerBound {
    int value = 0;
    std::string source;  // which result produced the bound
};

struct IndexReportFlags {
    bool horosphere = false;
    bool stable_excluded = false;       // interval pinned by the stability exclusion
    bool finite_total_curvature = true;
    bool infinite_index = false;
    bool addendum_mode = false;         // collapse the interval to ind_u
    bool inconsistent = false;          // a lower bound exceeded ind_u
};

struct IndexReport {
    std::string name;
    int ind_u = 0;        // = number of negative eigenvalues on the compactification
    int lo = 0, hi = 0;   // reported interval for the constrained index
    std::vector<LowerBound> lower_bounds;
    int nullity = -1;     // -1 when not computed
    IndexReportFlags flags;
};

// Interval [max(ind_sigma - 1, 0), ind_sigma]; the horosphere is pinned to 0,
// and a complete non-horosphere with ind_sigma = 1 is pinned to 1 because
// only the horosphere is stable.
IndexReport index_interval(int ind_sigma, bool is_horosphere, bool addendum_mode = false);

// Lower bound from vision numbers: v_adj - 1 when v_adj != v, else v_adj - 2,
// clamped at 0.
int vision_bound(int v, int v_adj);

// Lower bound for a small-deformation surface from the minimal-surface index.
int deformation_bound(int ind_minimal);

// Merges a lower bound into the report interval and flags inconsistencies.
void apply_lower_bound(IndexReport& report, const LowerBound& lb);

// Paper-backed reports for the named families.
// names: horosphere, catenoid-cousin(mu), enneper-cousin(k),
// uy-power-gauss(m), uy-degree-one-gauss, genus1-catenoid-cousin, dual-enneper,
// costa-cousin(k), genus0-noid-cousin(n), genus1-noid-cousin(n).
struct CatalogQuery {
    std::string name;
    double mu = 0.0;
    int k = 1;
    int n = 3;
    int m = 3;
    bool addendum_mode = false;
};

IndexReport catalog_lookup(const CatalogQuery& query);

}  // namespace cmc1

#endif
