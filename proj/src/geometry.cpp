#include "cmc1/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "cmc1/spectral_numeric.hpp"

namespace cmc1 {

MetricSample metric_and_curvature(const HoloFn& G, const HoloFn& g, const HoloFn& f,
                                  const BranchedPoint& at) {
    const HoloValue Gv = G(at);
    const HoloValue gv = g(at);
    const HoloValue fv = f(at);

    MetricSample m;
    m.z = at.z;
    m.Q_coeff = -fv.value * gv.derivative;

    const double absGp = std::abs(Gv.derivative);
    const double one_G2 = 1.0 + std::norm(Gv.value);
    if (absGp == 0.0) {
        // isolated umbilic: the pseudometric vanishes there
        m.umbilic = true;
        m.rho = 0.0;
        m.K = 0.0;
        m.ds2_factor = 0.0;
        return m;
    }
    if (std::abs(gv.derivative) == 0.0 || std::abs(fv.value) == 0.0)
        throw std::domain_error("metric_and_curvature: g' or f vanishes at the sample");

    const double ratio = absGp * absGp / (std::abs(gv.derivative) * std::abs(fv.value) * one_G2 * one_G2);
    m.K = -4.0 * ratio * ratio;
    const double fac = std::abs(fv.value * gv.derivative / Gv.derivative);
    m.ds2_factor = one_G2 * one_G2 * fac * fac;
    m.rho = 4.0 * absGp * absGp / (one_G2 * one_G2);
    return m;
}

double pseudometric_factor(const HoloFn& G, const BranchedPoint& at) {
    const HoloValue Gv = G(at);
    const double one_G2 = 1.0 + std::norm(Gv.value);
    return 4.0 * std::norm(Gv.derivative) / (one_G2 * one_G2);
}

double pseudometric_factor_zmu(double mu, double r) {
    if (r <= 0.0) throw std::domain_error("pseudometric_factor_zmu: need r > 0");
    const double r2mu = std::pow(r, 2.0 * mu);
    const double den = 1.0 + r2mu;
    return 4.0 * mu * mu * std::pow(r, 2.0 * mu - 2.0) / (den * den);
}

namespace {

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                            double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0) throw tolerance_error("adaptive_simpson: recursion limit");
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

double total_pseudo_area(double mu, double quad_tol) {
    if (mu <= 0.0) throw std::invalid_argument("total_pseudo_area: mu must be positive");
    // truncate where the tail bound 8 mu e^{-2 mu S} drops below the tolerance
    double S = 5.0;
    while (8.0 * mu * std::exp(-2.0 * mu * S) > 0.25 * quad_tol * mu) S += 1.0;

    const HoloFn G = holo_power(Cplx(1.0, 0.0), mu);
    // integrate rho over the plane in log-polar coordinates: dA = e^{2s} ds dtheta
    auto radial = [&](double s) {
        const double r = std::exp(s);
        const double rho = pseudometric_factor(G, BranchedPoint{Cplx(r, 0.0), 0});
        return rho * r * r;
    };
    const double target = 4.0 * kPi * mu;
    return kTwoPi * adaptive_simpson(radial, -S, S, quad_tol * target / kTwoPi);
}

double rayleigh_quotient(const CylinderField& u, double mu, const RayleighOptions& opts) {
    if (mu <= 0.0) throw std::invalid_argument("rayleigh_quotient: mu must be positive");
    double S = opts.band;
    if (S <= 0.0) {
        S = 5.0;
        while (8.0 * mu * std::exp(-2.0 * mu * S) > 1e-12) S += 1.0;
    }
    const int ns = (opts.ns % 2 == 0) ? opts.ns + 1 : opts.ns;
    const double hs = 2.0 * S / (ns - 1);
    const double ht = kTwoPi / opts.ntheta;

    double dirichlet = 0.0, mass = 0.0;
    for (int i = 0; i < ns; ++i) {
        const double s = -S + i * hs;
        const double ws = (i == 0 || i == ns - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        const double w = radial_weight(mu, s);
        double grad_row = 0.0, mass_row = 0.0;
        for (int j = 0; j < opts.ntheta; ++j) {
            const double th = j * ht;
            const double us = u.ds(s, th);
            const double ut = u.dtheta(s, th);
            const double uv = u.value(s, th);
            grad_row += us * us + ut * ut;
            mass_row += uv * uv * w;
        }
        dirichlet += ws * grad_row;
        mass += ws * mass_row;
    }
    dirichlet *= hs / 3.0 * ht;
    mass *= hs / 3.0 * ht;
    if (mass <= 0.0) throw std::domain_error("rayleigh_quotient: zero weighted norm");
    return (dirichlet - 2.0 * mass) / mass;
}

}  // namespace cmc1
