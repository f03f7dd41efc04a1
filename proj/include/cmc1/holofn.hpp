#ifndef CMC1_HOLOFN_HPP
#define CMC1_HOLOFN_HPP

#include <functional>
#include <string>

#include "cmc1/branch.hpp"
#include "cmc1/complexnum.hpp"

namespace cmc1 {

struct HoloValue {
    Cplx value;
    Cplx derivative;
};

// Evaluable holomorphic (possibly branched at z = 0) function.  Derivatives
// come from the constructors analytically, never from differencing.
struct HoloFn {
    std::function<HoloValue(const BranchedPoint&)> eval;
    // Order at the origin: zeros positive, poles negative, 0 for regular
    // nonvanishing.  Real for branched powers.
    double order_at_origin = 0.0;
    std::string name;

    HoloValue operator()(const BranchedPoint& p) const { return eval(p); }
    HoloValue at(const Cplx& z) const { return eval(BranchedPoint{z, 0}); }
};

// coeff, constant function
HoloFn holo_const(const Cplx& coeff);
// coeff * z^n, integer n (single valued; negative n has a pole at 0)
HoloFn holo_monomial(const Cplx& coeff, int n);
// coeff * z^mu, real exponent, branch tracked through the winding
HoloFn holo_power(const Cplx& coeff, double mu);
// a * z^n + b
HoloFn holo_affine_monomial(const Cplx& a, int n, const Cplx& b);
// tanh z (the Enneper-cousin secondary Gauss map)
HoloFn holo_tanh();

}  // namespace cmc1

#endif
