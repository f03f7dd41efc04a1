#ifndef CMC1_TESTS_SUPPORT_TESTRNG_HPP
#define CMC1_TESTS_SUPPORT_TESTRNG_HPP

#include <cmath>
#include <cstdint>

#include "cmc1/weierstrass.hpp"

namespace testsupport {

// splitmix64: tiny, seedable, identical across platforms
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0, 1)
    double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * next_double(); }
};

// Haar-ish random SU(2) element from three angles.
inline cmc1::SU2Matrix random_su2(Rng& rng) {
    const double phi = rng.uniform(0.0, 2.0 * cmc1::kPi);
    const double psi = rng.uniform(0.0, 2.0 * cmc1::kPi);
    const double t = std::acos(std::sqrt(rng.next_double()));
    cmc1::SU2Matrix B;
    B.b11 = std::polar(std::cos(t), phi);
    B.b12 = std::polar(std::sin(t), psi);
    return B;
}

}  // namespace testsupport

#endif
