#include "cmc1/holofn.hpp"

#include <cmath>
#include <stdexcept>

namespace cmc1 {

HoloFn holo_const(const Cplx& coeff) {
    HoloFn f;
    f.eval = [coeff](const BranchedPoint&) { return HoloValue{coeff, Cplx(0.0, 0.0)}; };
    f.order_at_origin = 0.0;
    f.name = "const";
    return f;
}

HoloFn holo_monomial(const Cplx& coeff, int n) {
    HoloFn f;
    f.eval = [coeff, n](const BranchedPoint& p) {
        if (n == 0) return HoloValue{coeff, Cplx(0.0, 0.0)};
        if (p.z == Cplx(0.0, 0.0)) {
            if (n < 0) throw std::domain_error("holo_monomial: pole at z = 0");
            if (n == 1) return HoloValue{Cplx(0.0, 0.0), coeff};
            return HoloValue{Cplx(0.0, 0.0), Cplx(0.0, 0.0)};
        }
        const Cplx zn1 = std::pow(p.z, n - 1);
        return HoloValue{coeff * zn1 * p.z, coeff * static_cast<double>(n) * zn1};
    };
    f.order_at_origin = n;
    f.name = "monomial";
    return f;
}

HoloFn holo_power(const Cplx& coeff, double mu) {
    HoloFn f;
    f.eval = [coeff, mu](const BranchedPoint& p) {
        const Cplx zmu = cpow(p, mu);
        return HoloValue{coeff * zmu, coeff * mu * zmu / p.z};
    };
    f.order_at_origin = mu;
    f.name = "power";
    return f;
}

HoloFn holo_affine_monomial(const Cplx& a, int n, const Cplx& b) {
    HoloFn f;
    HoloFn mono = holo_monomial(a, n);
    f.eval = [mono, b](const BranchedPoint& p) {
        HoloValue v = mono.eval(p);
        v.value += b;
        return v;
    };
    f.order_at_origin = (b == Cplx(0.0, 0.0)) ? static_cast<double>(n) : 0.0;
    f.name = "affine";
    return f;
}

HoloFn holo_tanh() {
    HoloFn f;
    f.eval = [](const BranchedPoint& p) {
        const Cplx t = std::tanh(p.z);
        return HoloValue{t, 1.0 - t * t};
    };
    f.order_at_origin = 1.0;
    f.name = "tanh";
    return f;
}

}  // namespace cmc1
