#ifndef CMC1_COMPLEXNUM_HPP
#define CMC1_COMPLEXNUM_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

namespace cmc1 {

using Cplx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;

inline bool is_finite(double x) { return std::isfinite(x); }

inline bool is_finite(const Cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(const Cplx& z, const char* what) {
    if (!is_finite(z)) throw std::domain_error(std::string("non-finite value in ") + what);
}

// Wraps an angle difference into (-pi, pi].
inline double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a <= -kPi) a += kTwoPi;
    if (a > kPi) a -= kTwoPi;
    return a;
}

}  // namespace cmc1

#endif
