#ifndef SU21_MAT3_HPP
#define SU21_MAT3_HPP

#include <array>
#include <cmath>
#include <ostream>

#include "su21/types.hpp"

namespace su21 {

// Dense 3x3 complex matrix. Row-major storage, value semantics.
struct Mat3 {
    std::array<cplx, 9> a{};

    cplx& operator()(int i, int j) { return a[3 * i + j]; }
    const cplx& operator()(int i, int j) const { return a[3 * i + j]; }

    static Mat3 identity() {
        Mat3 m;
        m(0, 0) = m(1, 1) = m(2, 2) = 1;
        return m;
    }

    static Mat3 diag(cplx d0, cplx d1, cplx d2) {
        Mat3 m;
        m(0, 0) = d0;
        m(1, 1) = d1;
        m(2, 2) = d2;
        return m;
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                cplx s = 0;
                for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
                r(i, j) = s;
            }
        return r;
    }

    Mat3 operator+(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 9; ++i) r.a[i] = a[i] + o.a[i];
        return r;
    }

    Mat3 operator-(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 9; ++i) r.a[i] = a[i] - o.a[i];
        return r;
    }

    Mat3 operator*(cplx c) const {
        Mat3 r;
        for (int i = 0; i < 9; ++i) r.a[i] = c * a[i];
        return r;
    }

    std::array<cplx, 3> apply(const std::array<cplx, 3>& v) const {
        std::array<cplx, 3> r{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }
};

inline Mat3 herm_conj(const Mat3& m) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = std::conj(m(j, i));
    return r;
}

inline Mat3 transpose(const Mat3& m) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = m(j, i);
    return r;
}

inline cplx det3(const Mat3& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

// Inverse via the adjugate; throws BadParameter when the determinant is
// numerically zero.
Mat3 inverse(const Mat3& m);

inline real max_abs_diff(const Mat3& x, const Mat3& y) {
    real d = 0;
    for (int i = 0; i < 9; ++i) d = std::max(d, std::abs(x.a[i] - y.a[i]));
    return d;
}

inline real max_abs(const Mat3& x) {
    real d = 0;
    for (int i = 0; i < 9; ++i) d = std::max(d, std::abs(x.a[i]));
    return d;
}

std::ostream& operator<<(std::ostream& os, const Mat3& m);

} // namespace su21

#endif
