#ifndef SU21_MAASS_SELBERG_HPP
#define SU21_MAASS_SELBERG_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>

#include "su21/fourier.hpp"

namespace su21 {

// A pair of Fourier term functions sharing the term order, the K-type
// (h, p, q) and the N-factors, so that only the radial components differ.
// This is the setting in which the sesquilinear bracket and the
// Maass-Selberg form reduce to sums over the radial components.
struct RadialPair {
    FourierTermFunction f1, f2;
    int sigma = 4;  // lattice parameter of Lambda_sigma (4 for Gamma_0)

    RadialPair(FourierTermFunction a, FourierTermFunction b, int sigma = 4);
};

// Squared L^2(K) norm of Phi^h_{p,p,q} under the mass-one Haar measure,
// computed by quadrature and cached.
real kphi_norm2(int h, int p, int q);

// Sesquilinear form
//   {F1, F2}(t) = (2/sigma) ||Phi^h_{p,p,q}||^2_K
//                 sum_r binom(p, (p+r)/2) f_{1,r}(t) conj(f_{2,r}(t)).
cplx bracket(const RadialPair& pr, real t);

// Combined Wronskian
//   W(F1, F2)(t) = sum_r binom(p, (p+r)/2) Wr1(f_{1,r}, conj f_{2,r})(t),
// with Wr1(g, h) = g h' - g' h.
cplx script_w(const RadialPair& pr, real t);

// Maass-Selberg form MS(F1, F2) = {F1, C F2} - {C F1, F2}, computed two
// ways: (i) the eigenvalue shortcut (conj(lambda_2) - lambda_1) {F1, F2}
// using the Casimir eigenvalues of the two families, and (ii) the
// Wronskian form
//   (2/sigma) ||Phi||^2 sum_r binom (-3 t Wr1 + t^2 Wr2)
//   = (2/sigma) ||Phi||^2 t^5 d/dt (t^{-3} W(F1,F2)(t)),
// with Wr2(g, h) = g h'' - g'' h.  PrecisionLoss if the two routes
// disagree beyond 1e-6 * scale.  Returns the Wronskian-form value.
cplx ms_form(const RadialPair& pr, real t);

// Closed-form value of W(Mu(nu0), Omega(nu0))(t) for a catalog class and a
// compatible Fourier term order:
//   - one-dimensional minimal K-type, abelian order: -t^3;
//   - one-dimensional, non-abelian: -4 pi |ell| Gamma(nu0+1) t^3
//     / Gamma((nu0+1)/2 - kappa), which vanishes exactly when
//     (nu0+1)/2 - kappa is a nonpositive integer (gamma pole);
//   - higher-dimensional minimal K-type (abelian or non-abelian): 0 by the
//     alternating binomial collapse.
// The closed form is cross-checked against the numeric script_w at the
// same t; Mismatch if they disagree beyond 1e-7 relative.  NotRepresented
// for (class, order) cells that do not occur in the Fourier expansion.
cplx wronskian_mu_omega(const IsoClass& cls, const FourierTermOrder& order,
                        real t);

// Wronskian order of the (class, order) cell:
//   - W(Mu(nu0), Omega(nu0)) not identically 0  ->  1  (2 if nu0 = 0);
//   - W == 0, nu0 != 0, {Mu, Omega}(t) != 0     ->  0;
//   - nu0 = 0 and W == 0: the gamma-regularized limit
//       a = lim_{nu -> 0} Gamma((1+nu)/2 - kappa) W(Mu(nu), Omega(0))(t)
//           / t^3
//     is evaluated by finite differences in nu (step 1e-3, Richardson) at
//     two t values; a != 0 -> 1, else a bracket test -> 0.
// "W == 0" requires both the closed-form criterion and |script_w| <
// 1e-9 * scale at five spread t points.  Unclassifiable when the
// numerical signals are ambiguous.
int wronskian_order(const IsoClass& cls, const FourierTermOrder& order);

// Exact alternating sum  sum_{n=0}^{p0} (-1)^n binom(p0, n) / (n+1),
// equal to 1/(p0+1); nonzero for every p0 >= 0.
boost::multiprecision::cpp_rational binomial_alternating(int p0);

// Scalar-product Wronskian integral
//   I(phi'; F1, F2) = int phi'(t) W(F1, F2)(t) t^{-3} dt
// over [t0, t1] (the support of phi'), by composite Gauss-Legendre
// quadrature with `panels` subintervals.
cplx i_n_integral(const RadialPair& pr, const std::function<real(real)>& dphi,
                  real t0, real t1, int panels = 16);

}  // namespace su21

#endif
