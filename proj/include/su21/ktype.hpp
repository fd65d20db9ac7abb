#ifndef SU21_KTYPE_HPP
#define SU21_KTYPE_HPP

#include <functional>

#include "su21/mat3.hpp"
#include "su21/types.hpp"

namespace su21 {

// Index (h, p, r, q) of the polynomial function Phi^h_{p,r,q} on K.
// Requires p >= 0, h == p == r == q (mod 2), |r| <= p, |q| <= p.
struct KIndex {
    int h = 0, p = 0, r = 0, q = 0;
};
bool kindex_valid(const KIndex& idx);

// Entries of k = [[a,b,0],[c,d,0],[0,0,delta]] with delta * det[[a,b],[c,d]] = 1.
struct KPoint {
    cplx a{1}, b{0}, c{0}, d{1}, delta{1};
};
// Extract a KPoint from a matrix, checking membership in K within tol.
KPoint kpoint_from(const Mat3& k, real tol = 1e-10);
Mat3 kpoint_mat(const KPoint& k);

// Phi^h_{p,r,q}(k): the coefficient of x^{(p-r)/2} in
// delta^{(h+p)/2} (a x + c)^{(p-q)/2} (b x + d)^{(p+q)/2}.
cplx kpoly_eval(const KIndex& idx, const KPoint& k);

// Haar integral over K, normalized to total mass 1, via the parametrization
// k = block(eta*v, eta^{-2}) with v in SU(2) (Euler-angle quadrature) and
// eta on the unit circle; `order` controls the number of nodes per direction.
cplx k_integrate(const std::function<cplx(const KPoint&)>& f, int order = 24);

// Basis of the Lie algebra (and the central direction CK_i = 3 W0 - 2 H_i).
enum class LieTag { X0, X1, X2, Hr, Hi, W0, W1, W2, CKi };
// Closed-form one-parameter subgroup exp(t X).
Mat3 lie_exp(LieTag X, real t);

// Right Lie derivative (d/dt) Phi^h_{p,r,q}(k exp(tX)) at t = 0, by
// Richardson-extrapolated central differences.  Z12/Z21 are the complex
// combinations W1 -/+ i W2.
enum class WeightTag { CKi, W0, W1, W2, Z12, Z21 };
cplx weight_action(WeightTag X, const KIndex& idx, const KPoint& k);

} // namespace su21

#endif
