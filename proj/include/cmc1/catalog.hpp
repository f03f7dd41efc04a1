#ifndef CMC1_CATALOG_HPP
#define CMC1_CATALOG_HPP

#include <optional>
#include <string>

#include "cmc1/weierstrass.hpp"

namespace cmc1 {

// Dual-form surface data: secondary Gauss map G and the one-form coefficient
// omega with Hopf differential Q = omega dG.  The frame F^{-1} solves
// d(F^{-1}) = F^{-1} [[G, -G^2], [1, -G]] omega dz.
struct DualData {
    HoloFn G;
    HoloFn omega;
    std::vector<Cplx> punctures;
};

// A catalog surface: either direct (f, g) data, dual (G, omega) data, or
// both.  Closed-form frames are stored in the F(z0) = identity gauge for the
// direct route and in the end-normalized gauge for the dual route.
struct CatalogSurface {
    std::string name;
    std::optional<WeierstrassData> data;
    std::optional<DualData> dual;
    std::function<Mat2c(const Cplx&)> closed_frame;             // F(z), direct gauge
    std::function<Mat2c(const BranchedPoint&)> closed_dual_frame;  // F^{-1}(z), end gauge
    double mu = 0.0;   // exponent of the secondary Gauss map at the z = 0 end
    int end_m = 0;     // winding of the end (0 when not applicable)
};

// f = 1, g = 1, c = 1: the horosphere.  F = [[1+z, -z], [z, 1-z]].
CatalogSurface catalog_horosphere();

// f = 1, g = z^k, c = 1: Enneper cousins (k = 1 is the basic one).
// Closed frame stored for k = 1.
CatalogSurface catalog_enneper_cousin(int k = 1);

// Dual data G = z^mu, omega = ((1-mu^2)/(4 mu)) z^{-1-mu}: catenoid cousins,
// both ends of winding m = 1, embedded exactly when mu < 1.
CatalogSurface catalog_catenoid_cousin(double mu);

// Dual data G = z, omega = 2 z^{-2} (the l = 1, a = 1, c = 2 example with
// idle coefficient b = 0): catenoid-type ends of winding m = 3.
CatalogSurface catalog_uy_l1a1c2();

CatalogSurface catalog_by_name(const std::string& name, double mu);

// Exact dual frame for pure-power data G = z^mu, omega = (q2/mu) z^{-1-mu}:
// F^{-1}(z) = (mu m)^{-1/2} [[(mu+m)/2 z^{(m-mu)/2}, (mu-m)/2 z^{(mu+m)/2}],
//                            [(mu-m)/2 z^{-(mu+m)/2}, (mu+m)/2 z^{(mu-m)/2}]]
// with m = sqrt(mu^2 + 4 q2).
Mat2c pure_power_dual_frame(double mu, double q2, const BranchedPoint& z);

}  // namespace cmc1

#endif
