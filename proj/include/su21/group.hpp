#ifndef SU21_GROUP_HPP
#define SU21_GROUP_HPP

#include "su21/mat3.hpp"
#include "su21/types.hpp"

namespace su21 {

// The defining Hermitian form of signature (2,1).
Mat3 form_I21();

// Generators in the fixed matrix realization.
Mat3 mk_n(cplx b, real r);          // unipotent n(b, r)
Mat3 mk_a(real y);                  // split torus a(y), y > 0
Mat3 mk_m(cplx eta);                // compact torus m(eta), |eta| = 1
Mat3 mk_w();                        // Weyl representative diag(-1,-1,1)
// Generic K element from u in U(2) (given row-major) and delta with
// delta * det(u) = 1. Throws NotUnitary if u is not unitary or the
// determinant constraint fails.
Mat3 mk_k(const std::array<cplx, 4>& u, cplx delta);

// Membership test: g* I21 g = I21 and det g = 1, entrywise tolerance tol.
bool is_member(const Mat3& g, real tol = 1e-10);

struct Iwasawa {
    cplx b;   // Heisenberg coordinate of the N part
    real r;   // Heisenberg coordinate of the N part
    real t;   // height, A part a(t)
    Mat3 k;   // compact part
};

// G = N A K decomposition. Throws NotInGroup if g fails is_member and
// DegenerateHeight if the height extraction degenerates numerically.
Iwasawa iwasawa(const Mat3& g, real tol = 1e-10);

// Height map of the Bruhat cell: for g = n1 w a(t1) m n(b, r) a(t) k the
// Iwasawa height of g is t / (t1 * |2 i r + t^2 + |b|^2|).
real bruhat_height(real t1, cplx b, real r, real t);

} // namespace su21

#endif
