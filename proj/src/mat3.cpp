#include "su21/mat3.hpp"

namespace su21 {

Mat3 inverse(const Mat3& m) {
    cplx d = det3(m);
    if (std::abs(d) < 1e-300)
        throw BadParameter("inverse: singular matrix");
    Mat3 adj;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // cofactor expansion; adj(j,i) = cofactor(i,j)
            int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
            int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
            adj(j, i) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
        }
    return adj * (cplx(1) / d);
}

std::ostream& operator<<(std::ostream& os, const Mat3& m) {
    for (int i = 0; i < 3; ++i) {
        os << "[";
        for (int j = 0; j < 3; ++j) {
            os << m(i, j).real() << (m(i, j).imag() < 0 ? "-" : "+")
               << std::abs(m(i, j).imag()) << "i";
            if (j < 2) os << ", ";
        }
        os << "]\n";
    }
    return os;
}

} // namespace su21
