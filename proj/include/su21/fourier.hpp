#ifndef SU21_FOURIER_HPP
#define SU21_FOURIER_HPP

#include <functional>
#include <variant>
#include <vector>

#include "su21/group.hpp"
#include "su21/heisenberg.hpp"
#include "su21/ktype.hpp"
#include "su21/spectral.hpp"

namespace su21 {

// Fourier term order: abelian chi_beta or non-abelian (ell, c, d).
using FourierTermOrder = std::variant<AbelianOrder, NonAbelianOrder>;

enum class FTKind { Mu, Omega, Upsilon };

// One term of the Iwasawa expansion sum_r w_r(n) h_r(t) Phi^h_{p,r,q}(k).
// The N-factor w_r is the bare character / theta function; any constant
// coefficient of the term is folded into the radial factor.
struct FTComponent {
    int r = 0;
    std::function<cplx(const NPoint&)> nfactor;
    std::function<cplx(real)> radial;
    std::function<cplx(real)> radial_dt;  // d/dt of radial
};

struct FourierTermFunction {
    FourierTermOrder order;
    FTKind kind = FTKind::Omega;
    int h = 0, p = 0, q = 0;  // K-type tau^h_p, weight q
    cplx j{0}, nu{0};         // spectral parameters of the family
    std::vector<FTComponent> components;  // r == p (mod 2), |r| <= p

    cplx eval(const NPoint& n, real t, const KPoint& k) const;
    // Evaluation at a general group element via Iwasawa decomposition.
    cplx eval_mat(const Mat3& g) const;
};

// One-dimensional K-type families (h, p, q) = (2j, 0, 0).
// Abelian orders give radial parts t^2 K_nu(2 pi |beta| t) (omega) and
// t^2 I_nu(2 pi |beta| t) (mu); non-abelian orders give
// t W_{kappa,nu/2}(2 pi |ell| t^2) and t M_{kappa,nu/2}(2 pi |ell| t^2)
// with (m0, kappa) from nonabelian_indices.
FourierTermFunction mu_1d(const FourierTermOrder& order, int j, cplx nu);
FourierTermFunction omega_1d(const FourierTermOrder& order, int j, cplx nu);
// Third family, non-abelian only, radial part t V_{kappa,nu/2}(2 pi |ell| t^2).
FourierTermFunction upsilon_1d(const NonAbelianOrder& order, int j, cplx nu);

// Explicit minimal-K-type families at (j, nu) = (-h0, p0) for a catalog
// class with p0 >= 1.  Abelian:
//   Omega = sum_r chi_beta(n) (beta/|beta|)^{(r+p)/2} t^{2+p}
//           K_{|h-r|/2}(2 pi |beta| t) Phi^h_{p,r,q},
//   Mu    = same with (-beta/|beta|)^{(r+p)/2} and I_{|h-r|/2};
//   the phase bases are fixed by the Casimir eigenfunction property in the
//   chi_beta and Phi conventions used here.
// Non-abelian, with (m(h,r), kappa(r), s(r)) from highdim_indices and the
// sum restricted to integer m(h,r) >= 0:
//   Omega = sum_r Theta_{ell,c}(h_{ell,m}) i^m sqrt(m!) t^{1+p}
//           W_{kappa(r),s(r)}(2 pi |ell| t^2) Phi^h_{p,r,q},
//   Mu    = sum_r Theta_{ell,c}(h_{ell,m}) cM(r) t^{1+p}
//           M_{kappa(r),|s(r)|}(2 pi |ell| t^2) Phi^h_{p,r,q},
//   cM(r) = -e^{pi i (m - kappa(r))} Gamma(1/2 + |s(r)| - kappa(r))
//           / (sqrt(m!) Gamma(2|s(r)| + 1)).
FourierTermFunction mu_hd(const FourierTermOrder& order, const IsoClass& cls,
                          int q);
FourierTermFunction omega_hd(const FourierTermOrder& order, const IsoClass& cls,
                             int q);
// The coefficient cM above, exposed for direct checks.
cplx hd_mu_coefficient(long m, real kappa, real s_abs);

// Numeric Casimir operator acting by right differentiation,
//   C = -1/3 CKi^2 + 2i CKi - W0^2 + 2i W0 - Z12 Z21 + 4 Z13 Z31 + 4 Z23 Z32
// (equal to the Iwasawa form
//   Hr^2 - 4 Hr - 1/3 Hi^2 + 4 X0 Hi - 8 X0 W0 + 4 X0^2
//   - 2 X1 W1 + X1^2 - 2 X2 W2 + X2^2),
// each monomial expanded into real-direction central differences with
// Richardson extrapolation (h = 1e-3, 5e-4).  PrecisionLoss if the two
// levels disagree by more than 1e-4 * scale.
cplx casimir_apply_fn(const std::function<cplx(const Mat3&)>& f, const Mat3& g);
cplx casimir_apply(const FourierTermFunction& f, const Mat3& g);

} // namespace su21

#endif
