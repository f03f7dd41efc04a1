#ifndef CMC1_MAT2C_HPP
#define CMC1_MAT2C_HPP

#include <algorithm>
#include <cmath>

#include "cmc1/complexnum.hpp"

namespace cmc1 {

// 2x2 complex matrix [[a, b], [c, d]].
struct Mat2c {
    Cplx a{0.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{0.0, 0.0};

    static Mat2c identity() { return {Cplx(1.0), Cplx(0.0), Cplx(0.0), Cplx(1.0)}; }

    Cplx det() const { return a * d - b * c; }
    Cplx trace() const { return a + d; }

    Mat2c operator+(const Mat2c& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2c operator-(const Mat2c& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2c operator*(const Mat2c& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    friend Mat2c operator*(const Cplx& s, const Mat2c& m) {
        return {s * m.a, s * m.b, s * m.c, s * m.d};
    }
    friend Mat2c operator*(double s, const Mat2c& m) { return Cplx(s) * m; }

    // Inverse by cofactors; caller ensures det != 0.
    Mat2c inverse() const {
        const Cplx dt = det();
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    // Conjugate transpose.
    Mat2c conj_transpose() const {
        return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
    }

    double max_abs() const {
        return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    }
};

inline double max_abs_diff(const Mat2c& x, const Mat2c& y) { return (x - y).max_abs(); }

}  // namespace cmc1

#endif
