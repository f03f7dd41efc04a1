#include "cmc1/hypergeom.hpp"

#include <cmath>
#include <stdexcept>

namespace cmc1 {

namespace {

void check_c(double c) {
    if (c <= 0.0 && std::abs(c - std::nearbyint(c)) < 1e-12)
        throw std::domain_error("hypergeom_terminating: c is a nonpositive integer");
}

}  // namespace

double pochhammer(double alpha, int i) {
    if (i < 0) throw std::invalid_argument("pochhammer: negative index");
    double r = 1.0;
    for (int k = 0; k < i; ++k) r *= alpha + k;
    return r;
}

double hypergeom_terminating(double a, int p, double c, double x) {
    if (p < 0) throw std::invalid_argument("hypergeom_terminating: p must be nonnegative");
    check_c(c);
    // term_{i+1}/term_i = (a+i)(-p+i)/((i+1)(c+i)) * x
    double term = 1.0;
    double sum = 1.0;
    for (int i = 0; i < p; ++i) {
        term *= (a + i) * (-p + i) / ((i + 1.0) * (c + i)) * x;
        sum += term;
    }
    return sum;
}

double hypergeom_terminating_dx(double a, int p, double c, double x) {
    if (p < 0) throw std::invalid_argument("hypergeom_terminating: p must be nonnegative");
    check_c(c);
    // d/dx F(a,-p,c,x) = sum_{i>=1} coef_i * i * x^{i-1}
    double coef = 1.0;
    double sum = 0.0;
    double xpow = 1.0;
    for (int i = 1; i <= p; ++i) {
        coef *= (a + (i - 1)) * (-p + (i - 1)) / (i * (c + (i - 1)));
        sum += coef * i * xpow;
        xpow *= x;
    }
    return sum;
}

}  // namespace cmc1
