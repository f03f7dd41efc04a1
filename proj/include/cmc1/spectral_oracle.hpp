#ifndef CMC1_SPECTRAL_ORACLE_HPP
#define CMC1_SPECTRAL_ORACLE_HPP

#include <vector>

namespace cmc1 {

// Secondary Gauss map in the normal form G = z^mu, mu > 0.
struct GaussMapZmu {
    double mu = 1.0;
};

GaussMapZmu make_zmu(double mu);  // validates mu > 0

// One eigenvalue lambda_{p,q} = (p + q/mu)(1 + p + q/mu) of the pull-back
// spherical Laplacian, with multiplicity 2 exactly when q > 0.
struct EigenPair {
    int p = 0;
    int q = 0;
    double lambda = 0.0;
    int multiplicity = 1;
};

double lambda_pq(int p, int q, double mu);

enum class AngularParity { cosine, sine };

// phi_{p,q}(t) = (1-t^2)^{q/(2 mu)} F(p + 2q/mu + 1, -p, q/mu + 1, (1-t)/2)
double phi_pq(int p, int q, double mu, double t);
double phi_pq_dt(int p, int q, double mu, double t);

// v_{p,q}(r) = phi_{p,q}((r^{2 mu} - 1)/(r^{2 mu} + 1))
double v_pq(int p, int q, double mu, double r);

// v as a function of s = ln r, i.e. phi_{p,q}(tanh(mu s)), and its
// s-derivative.
double v_pq_logr(int p, int q, double mu, double s);
double v_pq_logr_ds(int p, int q, double mu, double s);

// Full separated eigenfunction v_{p,q}(r) cos(q theta) or sin(q theta).
double eigenfunction(int p, int q, double mu, double r, double theta, AngularParity parity);

struct AnalyticIndex {
    int ind_u = 0;              // eigenvalues strictly below 2, with multiplicity
    int nullity = 0;            // eigenvalues exactly equal to 2
    std::vector<EigenPair> eigen_list;  // all pairs with lambda < 2 + null_band
};

// Enumerates the spectrum below 2 (+ null_band for the returned list).  The
// nullity test is algebraic: lambda = 2 iff p + q/mu = 1.
AnalyticIndex analytic_index(double mu, double null_band = 1e-9);
AnalyticIndex analytic_index(const GaussMapZmu& map, double null_band = 1e-9);

// All eigenvalues strictly below `bound`, sorted ascending (p-major per q).
std::vector<EigenPair> enumerate_below(double mu, double bound);

}  // namespace cmc1

#endif
