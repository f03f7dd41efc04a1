#ifndef CMC1_GEOMETRY_HPP
#define CMC1_GEOMETRY_HPP

#include <functional>

#include "cmc1/holofn.hpp"
#include "cmc1/weierstrass.hpp"

namespace cmc1 {

// Pointwise metric data of the immersed surface at a parameter point.
// ds2_factor is the conformal factor of the induced metric against |dz|^2,
// K the Gaussian curvature, Q_coeff the Hopf differential coefficient and
// rho the conformal factor of the pull-back spherical pseudometric -K ds^2.
struct MetricSample {
    Cplx z;
    double ds2_factor = 0.0;
    double K = 0.0;
    Cplx Q_coeff{0.0, 0.0};
    double rho = 0.0;
    bool umbilic = false;  // G' = 0 at the sample
};

// Closed-form first fundamental form, curvature and Hopf coefficient from the
// secondary Gauss map G and data (g, f):
//   ds^2 = (1+|G|^2)^2 |f g'/G'|^2 |dz|^2
//   K    = -4 (|G'|^2 / (|g'| |f| (1+|G|^2)^2))^2
//   Q    = -f g' dz^2
MetricSample metric_and_curvature(const HoloFn& G, const HoloFn& g, const HoloFn& f,
                                  const BranchedPoint& at);

// rho(z) = 4 |G'|^2 / (1 + |G|^2)^2.
double pseudometric_factor(const HoloFn& G, const BranchedPoint& at);

// rho for the normal form G = z^mu as a function of r = |z|:
// 4 mu^2 r^{2 mu - 2} / (1 + r^{2 mu})^2.
double pseudometric_factor_zmu(double mu, double r);

// Total integral of rho over the plane; equals 4 pi mu for G = z^mu.
double total_pseudo_area(double mu, double quad_tol = 1e-9);

// Scalar field on the log-polar cylinder (s = ln r, theta), with analytic
// partial derivatives.
struct CylinderField {
    std::function<double(double, double)> value;
    std::function<double(double, double)> ds;      // d/ds
    std::function<double(double, double)> dtheta;  // d/dtheta
};

struct RayleighOptions {
    double band = 0.0;   // half-width of the s-interval; 0 picks one from mu
    int ns = 4001;       // Simpson nodes in s (odd)
    int ntheta = 32;     // trapezoid nodes in theta
};

// Rayleigh quotient of the operator pair (Dirichlet integral, weighted mass)
// for the G = z^mu pseudometric:
//   ( int (u_s^2 + u_theta^2) ds dtheta - 2 int u^2 w ds dtheta )
//   / int u^2 w ds dtheta,  w(s) = mu^2 / cosh^2(mu s).
double rayleigh_quotient(const CylinderField& u, double mu, const RayleighOptions& opts = {});

// Adaptive Simpson quadrature on [a, b].
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol);

}  // namespace cmc1

#endif
