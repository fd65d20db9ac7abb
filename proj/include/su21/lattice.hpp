#ifndef SU21_LATTICE_HPP
#define SU21_LATTICE_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "su21/fourier.hpp"
#include "su21/gaussint.hpp"
#include "su21/group.hpp"
#include "su21/heisenberg.hpp"
#include "su21/ktype.hpp"

namespace su21 {

// Element of Gamma0 = SU(2,1) with entries in Z[i]; membership
// (herm_conj(m) I21 m = I21 and det m = 1) is verified exactly on
// construction.  `word` records the generator word that produced the
// element during enumeration ('a'..'f' for the conjugated Lambda_4
// generators and their inverses, 'm'/'M' for m(i)^{+-1}, 'w' for w).
struct LatticeElement {
    GMat3 m;
    std::string word;

    explicit LatticeElement(GMat3 mat, std::string w = "");
};

// Exact membership check for Gamma0 (no throw).
bool gamma0_member(const GMat3& m);

// Exact inverse inside Gamma0: m^{-1} = I21 m^* I21.
GMat3 gamma0_inverse(const GMat3& m);

// Exact test whether m has the shape of n(b, r), i.e. lies in Gamma0 cap N.
bool in_gamma_n(const GMat3& m);

// Exact test whether m fixes the cusp at infinity (m v0 parallel to v0
// with v0 = (1,0,1)^t), i.e. lies in the parabolic Gamma_P.
bool fixes_cusp(const GMat3& m);

// Exact coset invariant: gamma^{-1} v0, constant on Gamma_N gamma since
// n(b, r) fixes v0.
using CosetKey = std::array<GaussInt, 3>;
CosetKey coset_key(const GMat3& gamma);

// Default generating set: the three conjugated Lambda_4 generators
// ginf n(1,0) ginf^{-1} = n(-1+i, 0), ginf n(i,0) ginf^{-1} = n(-1-i, 0),
// ginf n(0,1/2) ginf^{-1} = n(0, 1) (all with entries in Z[i], verified),
// plus m(i) = diag(i, -1, i) and w = diag(-1, -1, 1).
std::vector<LatticeElement> default_generators();

// Table of Gamma_N-coset representatives of words of length <= L,
// sorted by key; keys are pairwise distinct.
struct CosetTable {
    std::vector<LatticeElement> representatives;
    std::vector<CosetKey> keys;
    int length = 0;
};

// Breadth-first enumeration of all words of length <= L in the generators
// and their inverses, exact-matrix deduplication, then bucketing by coset
// key with one representative per key.  Representatives sharing a key are
// verified pairwise to differ by an element of Gamma0 cap N; a violation
// raises InvariantIncomplete.  More than `cap` distinct matrices raises
// CapExceeded.
CosetTable enumerate_cosets(const std::vector<LatticeElement>& gens, int L,
                            std::size_t cap = 2000000);

// The conjugator ginf = a(sqrt 2) m(e^{i pi/4}); Gamma0 cap N equals
// ginf Lambda_4 ginf^{-1}, and ginf^{-1} Gamma0 ginf is the discrete
// group whose N-intersection is the standard lattice Lambda_4.
Mat3 g_infinity();

// ginf^{-1} gamma ginf as a floating-point group element.
Mat3 conjugated_embedding(const GMat3& gamma);

// Truncated Eisenstein series: sum over table representatives gamma of
// t'^{2 + nu} Phi^h_{p,r,q}(k') where ginf^{-1} gamma ginf g = n' a(t') k'.
// Requires Re nu > 2 (OutsideConvergence) and h - 3r = 2j (BadParameter).
// Summation is deterministic (representatives in key order, compensated).
cplx eisenstein_partial(int j, cplx nu, const KIndex& idx, const Mat3& g,
                        const CosetTable& table);

// Truncated Poincare series sum_gamma Mu(ginf^{-1} gamma ginf g) with
// Mu = mu_1d(order, j, nu); requires Re nu > 2.  An optional radial
// cut-off multiplies each term by cutoff(t') with t' the Iwasawa height
// of the translate.
cplx poincare_partial(const FourierTermOrder& order, int j, cplx nu,
                      const Mat3& g, const CosetTable& table,
                      const std::function<real(real)>& cutoff = nullptr);

// The finite parabolic sum over Gamma_N \ Gamma_P, generated by
// Gamma_N m(i): value = sum_{a mod 4} Mu(m(i)^a g).  a_coeff is the
// coefficient of the order-N term of the sum, computed from orbit/DFT
// combinatorics: abelian orders contribute i^{a j} for each a with
// i^a beta = beta; non-abelian orders contribute i^{a j} times the
// diagonal return coefficient of the inverse m(i)-action matrix power.
struct PoincareInfty {
    cplx value{0};
    cplx a_coeff{0};
};
PoincareInfty poincare_infty(const FourierTermOrder& order, int j, cplx nu,
                             const Mat3& g);

// Abelian Fourier term operator (sigma/2) int chi_beta(n1)^{-1} f(n1 g) dn1
// over Lambda_sigma \ N, by trapezoid quadrature; the value at the doubled
// grid must agree within 1e-6 (QuadratureUnconverged otherwise).
cplx fourier_term_abelian(const GaussInt& beta,
                          const std::function<cplx(const Mat3&)>& f,
                          const Mat3& g, int sigma = 4,
                          const NGrid& grid = {32, 32, 8});

// Pointwise non-abelian Fourier term operator F_{ell,c} truncated at
// Hermite index mmax:
//   sum_{m <= mmax} Theta_{ell,c}(h_m)(n) *
//       (sigma/2) int conj(Theta_{ell,c}(h_m)(n1)) f(n1 a k) dn1,
// with g = n a k.  Same grid-doubling contract.
cplx fourier_term_pointwise_nonabelian(const NonAbelianOrder& order,
                                       const std::function<cplx(const Mat3&)>& f,
                                       const Mat3& g, int mmax, int sigma = 4,
                                       const NGrid& grid = {32, 32, 8});

// Selection rule (6m + 3) sign(ell) + h - 3r = d for a Hermite index m
// paired with a K-polynomial index.
struct NAPair {
    int m = 0;
    KIndex idx;
};
bool selection_rule(const NonAbelianOrder& order, const NAPair& pair);

// Projection coefficients of f onto Theta_{ell,c}(h_m) (x) Phi^h_{p,r,q}
// for the given rule-satisfying pairs (BadIndex if a pair violates the
// rule), at each sample point g, via combined N x K quadrature.  The
// coefficient is normalized so that f = Theta(h_m) rho(t) Phi recovers
// rho(t) in the matching slot.
std::vector<std::vector<cplx>> fourier_term_nonabelian(
    const NonAbelianOrder& order, const std::function<cplx(const Mat3&)>& f,
    const std::vector<Mat3>& gs, const std::vector<NAPair>& pairs,
    int sigma = 4, const NGrid& grid = {16, 16, 8}, int korder = 8);

// JSON-lines serialization: one object per representative with fields
// word, matrix (18 integers, row-major re/im pairs), key (6 integers).
std::string coset_table_jsonl(const CosetTable& table);

} // namespace su21

#endif
