#include "cmc1/catalog.hpp"

#include <cmath>
#include <stdexcept>

namespace cmc1 {

Mat2c pure_power_dual_frame(double mu, double q2, const BranchedPoint& z) {
    const double m = std::sqrt(mu * mu + 4.0 * q2);
    if (m <= 0.0 || mu <= 0.0) throw std::domain_error("pure_power_dual_frame: bad exponents");
    const double scale = 1.0 / std::sqrt(mu * m);
    const double al = 0.5 * (mu + m);
    const double be = 0.5 * (mu - m);
    return {scale * al * cpow(z, -be), scale * be * cpow(z, al),
            scale * be * cpow(z, -al), scale * al * cpow(z, be)};
}

CatalogSurface catalog_horosphere() {
    CatalogSurface s;
    s.name = "horosphere";
    WeierstrassData d;
    d.f = holo_const(Cplx(1.0, 0.0));
    d.g = holo_const(Cplx(1.0, 0.0));
    d.c = 1.0;
    d.z0 = Cplx(0.0, 0.0);
    s.data = d;
    s.closed_frame = [](const Cplx& z) {
        return Mat2c{Cplx(1.0) + z, -z, z, Cplx(1.0) - z};
    };
    return s;
}

CatalogSurface catalog_enneper_cousin(int k) {
    if (k < 1) throw std::invalid_argument("catalog_enneper_cousin: k >= 1");
    CatalogSurface s;
    s.name = "enneper-cousin";
    WeierstrassData d;
    d.f = holo_const(Cplx(1.0, 0.0));
    d.g = holo_monomial(Cplx(1.0, 0.0), k);
    d.c = 1.0;
    d.z0 = Cplx(0.0, 0.0);
    s.data = d;
    if (k == 1) {
        s.closed_frame = [](const Cplx& z) {
            const Cplx ch = std::cosh(z), sh = std::sinh(z);
            return Mat2c{ch, sh - z * ch, sh, ch - z * sh};
        };
    }
    return s;
}

CatalogSurface catalog_catenoid_cousin(double mu) {
    if (mu <= 0.0 || mu == 1.0)
        throw std::invalid_argument("catalog_catenoid_cousin: need mu > 0, mu != 1");
    CatalogSurface s;
    s.name = "catenoid-cousin";
    s.mu = mu;
    s.end_m = 1;
    const double q2 = 0.25 * (1.0 - mu * mu);
    DualData dd;
    dd.G = holo_power(Cplx(1.0, 0.0), mu);
    dd.omega = holo_power(Cplx(q2 / mu, 0.0), -1.0 - mu);
    dd.punctures = {Cplx(0.0, 0.0)};
    s.dual = dd;
    s.closed_dual_frame = [mu, q2](const BranchedPoint& z) {
        return pure_power_dual_frame(mu, q2, z);
    };
    return s;
}

CatalogSurface catalog_uy_l1a1c2() {
    CatalogSurface s;
    s.name = "uy-l1a1c2";
    s.mu = 1.0;
    s.end_m = 3;
    const double q2 = 2.0;
    DualData dd;
    dd.G = holo_monomial(Cplx(1.0, 0.0), 1);
    dd.omega = holo_monomial(Cplx(2.0, 0.0), -2);
    dd.punctures = {Cplx(0.0, 0.0)};
    s.dual = dd;
    s.closed_dual_frame = [q2](const BranchedPoint& z) {
        return pure_power_dual_frame(1.0, q2, z);
    };
    return s;
}

CatalogSurface catalog_by_name(const std::string& name, double mu) {
    if (name == "horosphere") return catalog_horosphere();
    if (name == "enneper-cousin") return catalog_enneper_cousin(1);
    if (name == "catenoid-cousin") return catalog_catenoid_cousin(mu);
    if (name == "uy-l1a1c2") return catalog_uy_l1a1c2();
    throw std::invalid_argument("catalog: unknown surface '" + name + "'");
}

}  // namespace cmc1
