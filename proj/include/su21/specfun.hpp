#ifndef SU21_SPECFUN_HPP
#define SU21_SPECFUN_HPP

#include "su21/types.hpp"

namespace su21 {

// Complex gamma function (Lanczos approximation, reflection for Re z < 1/2).
cplx gamma_c(cplx z);
// Entire reciprocal 1/Gamma(z); returns 0 at the poles of Gamma.
cplx inv_gamma(cplx z);
// Digamma function for real argument (used by log-form Bessel oracles).
real digamma_r(real x);

// Modified Bessel functions of complex order nu at real x > 0, built from
// scratch: ascending series for moderate x, large-x asymptotics for I, and
// a cosh-kernel quadrature for K outside the reflection-formula regime.
cplx bessel_i(cplx nu, real x);
cplx bessel_k(cplx nu, real x);
cplx bessel_i_dx(cplx nu, real x);
cplx bessel_k_dx(cplx nu, real x);

// Confluent hypergeometric helpers (Kummer's function and the second
// solution U), exposed for cross-validation.
cplx kummer_1f1(cplx a, cplx b, real x);
cplx hyper_u(cplx a, cplx b, real x);

// Whittaker functions at real x > 0.  s may be complex; kappa is real in
// every use here but kept complex for uniformity.  All three are even in s
// (V and W by construction, M is not: M uses the parameter s as given).
cplx whittaker_m(cplx kappa, cplx s, real x);
cplx whittaker_w(cplx kappa, cplx s, real x);
cplx whittaker_v(cplx kappa, cplx s, real x);
cplx whittaker_m_dx(cplx kappa, cplx s, real x);
cplx whittaker_w_dx(cplx kappa, cplx s, real x);
cplx whittaker_v_dx(cplx kappa, cplx s, real x);

// Connection-formula evaluation of W (Gamma-weighted combination of M at
// +-s, with an epsilon-perturbed limit at 2s in Z).  Loses precision for
// mid-range x; retained for small-x cross-checks.
cplx whittaker_w_connection(cplx kappa, cplx s, real x);

struct WhittakerOde {
    // f'' = q(x) f with q = 1/4 - kappa/x + (s^2 - 1/4)/x^2.
    static cplx q(cplx kappa, cplx s, real x) {
        return cplx(0.25) - kappa / x + (s * s - cplx(0.25)) / (x * x);
    }
};

// Wronskians fg' - f'g of the radial pairs, for identity checks.
cplx wronskian_ik(cplx nu, real x);   // I_nu K_nu pair at x
cplx wronskian_mw(cplx kappa, cplx s, real x);

} // namespace su21

#endif
