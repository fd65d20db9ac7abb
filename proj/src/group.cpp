#include "su21/group.hpp"

#include <cmath>

namespace su21 {

Mat3 form_I21() { return Mat3::diag(1, 1, -1); }

Mat3 mk_n(cplx b, real r) {
    Mat3 m;
    cplx ir = I_UNIT * r;
    real nb2 = std::norm(b) / 2;
    m(0, 0) = cplx(1) + ir - nb2;
    m(0, 1) = b;
    m(0, 2) = -ir + nb2;
    m(1, 0) = -std::conj(b);
    m(1, 1) = 1;
    m(1, 2) = std::conj(b);
    m(2, 0) = ir - nb2;
    m(2, 1) = b;
    m(2, 2) = cplx(1) - ir + nb2;
    return m;
}

Mat3 mk_a(real y) {
    if (!(y > 0)) throw BadParameter("mk_a: y must be positive");
    real c = (y + 1 / y) / 2, s = (y - 1 / y) / 2;
    Mat3 m;
    m(0, 0) = c;
    m(0, 2) = s;
    m(1, 1) = 1;
    m(2, 0) = s;
    m(2, 2) = c;
    return m;
}

Mat3 mk_m(cplx eta) {
    if (std::abs(std::abs(eta) - 1) > 1e-12)
        throw BadParameter("mk_m: eta must lie on the unit circle");
    return Mat3::diag(eta, cplx(1) / (eta * eta), eta);
}

Mat3 mk_w() { return Mat3::diag(-1, -1, 1); }

Mat3 mk_k(const std::array<cplx, 4>& u, cplx delta) {
    // u = [[u0, u1], [u2, u3]] must be unitary and delta * det(u) = 1.
    cplx du = u[0] * u[3] - u[1] * u[2];
    cplx r00 = u[0] * std::conj(u[0]) + u[1] * std::conj(u[1]);
    cplx r11 = u[2] * std::conj(u[2]) + u[3] * std::conj(u[3]);
    cplx r01 = u[0] * std::conj(u[2]) + u[1] * std::conj(u[3]);
    if (std::abs(r00 - cplx(1)) > 1e-10 || std::abs(r11 - cplx(1)) > 1e-10 ||
        std::abs(r01) > 1e-10)
        throw NotUnitary("mk_k: u is not unitary");
    if (std::abs(delta * du - cplx(1)) > 1e-10)
        throw NotUnitary("mk_k: delta * det(u) != 1");
    Mat3 m;
    m(0, 0) = u[0];
    m(0, 1) = u[1];
    m(1, 0) = u[2];
    m(1, 1) = u[3];
    m(2, 2) = delta;
    return m;
}

bool is_member(const Mat3& g, real tol) {
    Mat3 J = form_I21();
    Mat3 t = herm_conj(g) * J * g;
    if (max_abs_diff(t, J) > tol) return false;
    if (std::abs(det3(g) - cplx(1)) > tol) return false;
    return true;
}

Iwasawa iwasawa(const Mat3& g, real tol) {
    if (!is_member(g, tol)) throw NotInGroup("iwasawa: matrix fails membership");
    // For g = n(b,r) a(t) k one has P = g g* = n a(t^2) n*, and with
    // f- = (1,0,-1)^t:  P f- = t^{-2} ( f- + (2ir - |b|^2) f+ - 2 conj(b) e2 ),
    // where f+ = (1,0,1)^t.  Read b, r, t off the components of q = P f-.
    Mat3 P = g * herm_conj(g);
    std::array<cplx, 3> q = P.apply({cplx(1), cplx(0), cplx(-1)});
    cplx fminus = (q[0] - q[2]) / cplx(2);  // = t^{-2}, must be real positive
    cplx fplus = (q[0] + q[2]) / cplx(2);   // = t^{-2} (2ir - |b|^2)
    real tm2 = fminus.real();
    if (!(tm2 > 1e-150) || std::abs(fminus.imag()) > tol * std::max<real>(1, std::abs(tm2)))
        throw DegenerateHeight("iwasawa: height extraction degenerated");
    real t = 1 / std::sqrt(tm2);
    cplx b = std::conj(-q[1] / (cplx(2) * fminus));
    real r = (fplus / fminus).imag() / 2;
    Mat3 k = inverse(mk_a(t)) * (inverse(mk_n(b, r)) * g);
    // Validate: k must be block-diagonal unitary in K.
    Mat3 kk = k * herm_conj(k);
    real scale = std::max<real>(1, max_abs(g));
    real ktol = 1e3 * tol * scale * scale;
    if (max_abs_diff(kk, Mat3::identity()) > ktol ||
        std::abs(k(0, 2)) > ktol || std::abs(k(1, 2)) > ktol ||
        std::abs(k(2, 0)) > ktol || std::abs(k(2, 1)) > ktol)
        throw NotUnitary("iwasawa: compact factor failed validation");
    return {b, r, t, k};
}

real bruhat_height(real t1, cplx b, real r, real t) {
    if (!(t1 > 0) || !(t > 0)) throw BadParameter("bruhat_height: heights must be positive");
    cplx D = cplx(2) * I_UNIT * r + t * t + std::norm(b);
    real ad = std::abs(D);
    if (ad < 1e-300) throw DegenerateHeight("bruhat_height: |D| vanishes");
    return t / (t1 * ad);
}

} // namespace su21
