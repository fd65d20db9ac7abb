#ifndef SU21_HEISENBERG_HPP
#define SU21_HEISENBERG_HPP

#include <functional>
#include <vector>

#include "su21/types.hpp"

namespace su21 {

// Point n(b, r) of the Heisenberg group N.
struct NPoint {
    cplx b{0};
    real r{0};
};

// Group law n(b1,r1) n(b2,r2) = n(b1+b2, r1+r2+Im(conj(b1) b2)).
NPoint n_mul(const NPoint& n1, const NPoint& n2);
NPoint n_inv(const NPoint& n);

// Unitary character chi_beta(n(b,r)) = exp(2 pi i Im(conj(beta) b)).
cplx character_eval(cplx beta, const NPoint& n);

using RealFn = std::function<cplx(real)>;

// Schroedinger representation pi_{2 pi ell} acting on functions of xi:
// (pi(n(x+iy, r)) phi)(xi) = e^{2 pi i ell (r - 2 xi x - x y)} phi(xi + y).
RealFn schrodinger_act(real ell, const NPoint& n, RealFn phi);

// L^2-normalized Hermite function h_{ell,k}; requires ell != 0, 0 <= k <= 64.
real hermite_eval(real ell, int k, real xi);

// Theta function attached to (ell, c) and a Schwartz vector phi:
//   Theta_{ell,c}(phi)(n(x+iy,r)) =
//     sum_k phi(c/(2 ell) + k + y) e^{2 pi i ell r} e^{-2 pi i ell x (c/ell + 2k + y)}.
// The summation window is chosen adaptively; TruncationFailure if the tail
// has not decayed by the cap.
cplx theta_eval(real ell, long c, const RealFn& phi, const NPoint& n,
                int kmax = 400);
// Specialization to phi = h_{ell,m} with a Gaussian-tail window.
cplx theta_eval_hermite(real ell, long c, int m, const NPoint& n);

// Numerical inner product over Lambda_sigma \ N with the measure dn
// (dx dy dr; total volume 2/sigma); grid sizes per direction (x, y, r).
struct NGrid {
    int nx = 64;
    int ny = 64;
    int nr = 16;
};
cplx theta_inner(real ell1, long c1, int m1, real ell2, long c2, int m2,
                 int sigma, const NGrid& grid = {});

// Generic quadrature of f over the fundamental domain of Lambda_sigma \ N
// against the normalized measure (sigma/2) dn.
cplx n_average(int sigma, const std::function<cplx(const NPoint&)>& f,
               const NGrid& grid = {});

// Action of m(i): with v_c = Theta_{ell,c}(h_{ell,m})(n(b,r)), the rotated
// values Theta_{ell,c'}(h_{ell,m})(n(ib,r)) are
//   (U v)_{c'} = (i sign ell)^m / sqrt(2|ell|) * sum_c v_c e^{-pi i c c' / ell}
// (convention fixed pointwise against theta_eval). Requires 2*ell integral.
std::vector<cplx> mi_transform(real ell, int m, const std::vector<cplx>& coeff);

} // namespace su21

#endif
