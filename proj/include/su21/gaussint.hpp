#ifndef SU21_GAUSSINT_HPP
#define SU21_GAUSSINT_HPP

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <ostream>
#include <string>

#include "su21/mat3.hpp"
#include "su21/types.hpp"

namespace su21 {

using bigint = boost::multiprecision::cpp_int;

// Gaussian integer a + b i with arbitrary-size components.
struct GaussInt {
    bigint re{0};
    bigint im{0};

    GaussInt() = default;
    GaussInt(bigint r) : re(std::move(r)) {}
    GaussInt(bigint r, bigint i) : re(std::move(r)), im(std::move(i)) {}
    GaussInt(long r, long i) : re(r), im(i) {}

    GaussInt operator+(const GaussInt& o) const { return {re + o.re, im + o.im}; }
    GaussInt operator-(const GaussInt& o) const { return {re - o.re, im - o.im}; }
    GaussInt operator-() const { return {-re, -im}; }
    GaussInt operator*(const GaussInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussInt conj() const { return {re, -im}; }
    bigint norm() const { return re * re + im * im; }

    bool operator==(const GaussInt& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussInt& o) const { return !(*this == o); }
    bool operator<(const GaussInt& o) const {
        if (re != o.re) return re < o.re;
        return im < o.im;
    }

    bool is_zero() const { return re == 0 && im == 0; }

    cplx to_cplx() const {
        return cplx(static_cast<real>(re.convert_to<double>()),
                    static_cast<real>(im.convert_to<double>()));
    }

    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const GaussInt& z);

// 3x3 matrix over the Gaussian integers; all arithmetic is exact.
struct GMat3 {
    std::array<GaussInt, 9> a{};

    GaussInt& operator()(int i, int j) { return a[3 * i + j]; }
    const GaussInt& operator()(int i, int j) const { return a[3 * i + j]; }

    static GMat3 identity() {
        GMat3 m;
        m(0, 0) = m(1, 1) = m(2, 2) = GaussInt(1);
        return m;
    }

    GMat3 operator*(const GMat3& o) const {
        GMat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                GaussInt s;
                for (int k = 0; k < 3; ++k) s = s + (*this)(i, k) * o(k, j);
                r(i, j) = s;
            }
        return r;
    }

    bool operator==(const GMat3& o) const { return a == o.a; }
    bool operator<(const GMat3& o) const {
        for (int i = 0; i < 9; ++i) {
            if (a[i] != o.a[i]) return a[i] < o.a[i];
        }
        return false;
    }

    GMat3 herm_conj() const {
        GMat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i).conj();
        return r;
    }

    GaussInt det() const {
        const GMat3& m = *this;
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }

    Mat3 to_mat3() const {
        Mat3 m;
        for (int i = 0; i < 9; ++i) m.a[i] = a[i].to_cplx();
        return m;
    }

    std::string str() const;
};

} // namespace su21

#endif
