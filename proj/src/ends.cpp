#include "cmc1/ends.hpp"

#include <cmath>
#include <sstream>

#include "cmc1/catalog.hpp"

namespace cmc1 {

std::array<Cplx, 2> indicial_roots(double nu, const Cplx& q2) {
    const Cplx disc = std::sqrt(Cplx((nu + 1.0) * (nu + 1.0), 0.0) + 4.0 * q2);
    return {0.5 * (Cplx(nu + 1.0) + disc), 0.5 * (Cplx(nu + 1.0) - disc)};
}

namespace {

int checked_integer(double raw, double tol, const char* which) {
    const double nearest = std::nearbyint(raw);
    if (nearest < 1.0 || std::abs(raw - nearest) > tol) {
        std::ostringstream os;
        os << "classify_end: " << which << " = " << raw
           << " is not a positive integer (nearest integers " << std::floor(raw) << ", "
           << std::ceil(raw) << "); the end is not well defined";
        throw end_classification_error(os.str());
    }
    return static_cast<int>(nearest);
}

}  // namespace

EndData classify_end(double mu, double nu, const Cplx& q_minus2, double int_tol) {
    if (mu <= 0.0) throw std::invalid_argument("classify_end: normalize so that mu > 0");
    if (nu > -1.0 + 1e-9)
        throw std::invalid_argument("classify_end: completeness requires nu <= -1");
    const double ord_raw = mu + nu - 1.0;
    if (std::abs(ord_raw - std::nearbyint(ord_raw)) > 1e-9)
        throw std::invalid_argument("classify_end: mu + nu must be an integer");
    const int ordQ = static_cast<int>(std::nearbyint(ord_raw));
    if (ordQ < -2)
        throw end_classification_error("classify_end: ord(Q) = " + std::to_string(ordQ) +
                                       " < -2, the end is not regular");

    EndData e;
    e.mu = mu;
    e.nu = nu;
    e.q_minus2 = q_minus2;
    e.ord_Q = ordQ;

    if (ordQ == -2) {
        if (std::abs(q_minus2) == 0.0)
            throw std::invalid_argument("classify_end: ord(Q) = -2 needs q_{-2} != 0");
        e.type = EndType::catenoid_cousin_type;
    } else {
        if (std::abs(q_minus2) > 1e-12)
            throw std::invalid_argument("classify_end: ord(Q) > -2 needs q_{-2} = 0");
        e.type = EndType::horosphere_type;
    }

    const Cplx m1c = std::sqrt(Cplx((nu + 1.0) * (nu + 1.0), 0.0) + 4.0 * q_minus2);
    const Cplx m2c =
        std::sqrt(Cplx((2.0 * mu + nu + 1.0) * (2.0 * mu + nu + 1.0), 0.0) + 4.0 * q_minus2);
    if (std::abs(m1c.imag()) > int_tol || std::abs(m2c.imag()) > int_tol)
        throw end_classification_error("classify_end: complex indicial gap, end not well defined");
    e.m1_raw = m1c.real();
    e.m2_raw = m2c.real();
    e.m1 = checked_integer(e.m1_raw, int_tol, "m1");
    e.m2 = checked_integer(e.m2_raw, int_tol, "m2");
    e.m = std::min(e.m1, e.m2);
    e.embedded = (e.m == 1);
    e.correction_exponent = std::min(1.0, 2.0 * mu);

    if (e.type == EndType::catenoid_cousin_type) {
        const double m = e.m;
        if (std::abs(mu - m) < 1e-12)
            throw end_classification_error("classify_end: catenoid type needs mu != m");
        e.c1 = (mu + m) / (mu - m);
        e.c2 = 4.0 * mu * m / ((mu - m) * (mu - m));
        e.c3 = e.c2 * std::pow(std::abs(e.c1), -(mu + m) / m);
    }
    return e;
}

GraphPoint asymptotic_graph(const EndData& end, const Cplx& z) {
    GraphPoint out;
    out.correction_exponent = end.correction_exponent;
    if (end.type == EndType::catenoid_cousin_type) {
        if (end.c1 == 0.0)
            throw std::domain_error("asymptotic_graph: degenerate catenoid-type constants");
        const Cplx zm = std::pow(z, end.m);
        out.x = {zm.real(), zm.imag(), end.c3 * std::pow(std::abs(z), end.mu + end.m)};
    } else {
        const int m = static_cast<int>(std::nearbyint(-end.nu - 1.0));
        const Cplx zm = std::pow(z, m);
        out.x = {zm.real(), zm.imag(), std::pow(std::abs(z), 2.0 * m)};
    }
    return out;
}

std::array<double, 3> asymptotic_graph_prenormal(const EndData& end, const Cplx& z) {
    if (end.type != EndType::catenoid_cousin_type)
        return asymptotic_graph(end, z).x;
    const Cplx zm = std::pow(z, end.m);
    return {end.c1 * zm.real(), end.c1 * zm.imag(),
            end.c2 * std::pow(std::abs(z), end.mu + end.m)};
}

Mat2c frame_asymptote(const EndData& end, const BranchedPoint& z) {
    if (end.type == EndType::catenoid_cousin_type)
        return pure_power_dual_frame(end.mu, end.q_minus2.real(), z);
    const int nu1 = static_cast<int>(std::nearbyint(end.nu + 1.0));
    return {Cplx(1.0), Cplx(0.0), cpow(z, nu1), Cplx(1.0)};
}

}  // namespace cmc1
