#include "cmc1/spectral_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cmc1/hypergeom.hpp"

namespace cmc1 {

namespace {

void check_pq(int p, int q, double mu) {
    if (p < 0 || q < 0) throw std::invalid_argument("spectral oracle: p, q must be nonnegative");
    if (mu <= 0.0) throw std::invalid_argument("spectral oracle: mu must be positive");
}

}  // namespace

GaussMapZmu make_zmu(double mu) {
    if (mu <= 0.0) throw std::invalid_argument("make_zmu: mu must be positive");
    return GaussMapZmu{mu};
}

double lambda_pq(int p, int q, double mu) {
    check_pq(p, q, mu);
    const double x = p + q / mu;
    return x * (1.0 + x);
}

namespace {

// phi with the factor base = 1 - t^2 supplied by the caller; the radial
// wrappers pass it in a cancellation-free form.
double phi_with_base(int p, int q, double mu, double t, double base) {
    const double F = hypergeom_terminating(p + 2.0 * q / mu + 1.0, p, q / mu + 1.0, 0.5 * (1.0 - t));
    if (q == 0) return F;
    if (base <= 0.0) return 0.0;
    return std::pow(base, q / (2.0 * mu)) * F;
}

}  // namespace

double phi_pq(int p, int q, double mu, double t) {
    check_pq(p, q, mu);
    return phi_with_base(p, q, mu, t, 1.0 - t * t);
}

double phi_pq_dt(int p, int q, double mu, double t) {
    check_pq(p, q, mu);
    const double a = p + 2.0 * q / mu + 1.0;
    const double c = q / mu + 1.0;
    const double x = 0.5 * (1.0 - t);
    const double F = hypergeom_terminating(a, p, c, x);
    const double Fx = hypergeom_terminating_dx(a, p, c, x);
    if (q == 0) return -0.5 * Fx;
    const double e = q / (2.0 * mu);
    const double base = 1.0 - t * t;
    if (base <= 0.0) return 0.0;  // limit along |t| -> 1 for q > 0
    const double powe = std::pow(base, e);
    return powe * (-2.0 * e * t / base * F - 0.5 * Fx);
}

double v_pq(int p, int q, double mu, double r) {
    check_pq(p, q, mu);
    if (r < 0.0) throw std::domain_error("v_pq: need r >= 0");
    if (r == 0.0) return (q == 0) ? phi_pq(p, 0, mu, -1.0) : 0.0;
    const double r2mu = std::pow(r, 2.0 * mu);
    const double den = r2mu + 1.0;
    // 1 - t^2 = 4 r^{2 mu}/(1 + r^{2 mu})^2 without cancellation
    return phi_with_base(p, q, mu, (r2mu - 1.0) / den, 4.0 * r2mu / (den * den));
}

double v_pq_logr(int p, int q, double mu, double s) {
    check_pq(p, q, mu);
    const double ch = std::cosh(mu * s);
    return phi_with_base(p, q, mu, std::tanh(mu * s), 1.0 / (ch * ch));
}

double v_pq_logr_ds(int p, int q, double mu, double s) {
    check_pq(p, q, mu);
    // d/ds phi(tanh(mu s)) = mu (1-t^2) phi'(t), written without the
    // (1-t^2)^{e-1} cancellation
    const double t = std::tanh(mu * s);
    const double ch = std::cosh(mu * s);
    const double base = 1.0 / (ch * ch);
    const double a = p + 2.0 * q / mu + 1.0;
    const double c = q / mu + 1.0;
    const double x = 0.5 * (1.0 - t);
    const double F = hypergeom_terminating(a, p, c, x);
    const double Fx = hypergeom_terminating_dx(a, p, c, x);
    const double e = q / (2.0 * mu);
    const double powe = (q == 0) ? 1.0 : std::pow(base, e);
    return mu * powe * (-2.0 * e * t * F - 0.5 * base * Fx);
}

double eigenfunction(int p, int q, double mu, double r, double theta, AngularParity parity) {
    if (parity == AngularParity::sine && q == 0)
        throw std::invalid_argument("eigenfunction: sine parity requires q > 0");
    const double ang = (parity == AngularParity::cosine) ? std::cos(q * theta) : std::sin(q * theta);
    return v_pq(p, q, mu, r) * ang;
}

std::vector<EigenPair> enumerate_below(double mu, double bound) {
    if (mu <= 0.0) throw std::invalid_argument("enumerate_below: mu must be positive");
    std::vector<EigenPair> out;
    for (int q = 0;; ++q) {
        if (lambda_pq(0, q, mu) >= bound) break;
        for (int p = 0;; ++p) {
            const double l = lambda_pq(p, q, mu);
            if (l >= bound) break;
            out.push_back({p, q, l, q > 0 ? 2 : 1});
        }
    }
    std::sort(out.begin(), out.end(), [](const EigenPair& x, const EigenPair& y) {
        if (x.lambda != y.lambda) return x.lambda < y.lambda;
        if (x.q != y.q) return x.q < y.q;
        return x.p < y.p;
    });
    return out;
}

AnalyticIndex analytic_index(const GaussMapZmu& map, double null_band) {
    return analytic_index(map.mu, null_band);
}

AnalyticIndex analytic_index(double mu, double null_band) {
    AnalyticIndex r;
    r.eigen_list = enumerate_below(mu, 2.0 + null_band);
    for (const EigenPair& e : r.eigen_list)
        if (e.lambda < 2.0) r.ind_u += e.multiplicity;

    // lambda = 2 exactly iff p + q/mu = 1: always (p,q) = (1,0); additionally
    // (0, mu) when mu is an integer.
    r.nullity = 1;
    const double mu_round = std::nearbyint(mu);
    if (mu_round >= 1.0 && std::abs(mu - mu_round) < 1e-12) r.nullity += 2;
    return r;
}

}  // namespace cmc1
