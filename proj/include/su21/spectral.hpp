#ifndef SU21_SPECTRAL_HPP
#define SU21_SPECTRAL_HPP

#include <vector>

#include "su21/gaussint.hpp"
#include "su21/types.hpp"

namespace su21 {

// A point (j, nu) of the spectral parameter plane.
struct SpectralPair {
    cplx j{0}, nu{0};
};

// Fourier term orders.
struct AbelianOrder {
    GaussInt beta;  // nonzero for nondegenerate terms
};
struct NonAbelianOrder {
    real ell = 0;  // in (sigma/2) Z, nonzero
    long c = 0;    // mod 2|ell|
    long d = 1;    // odd integer
};
void check_order(const NonAbelianOrder& order);

// Orbit of (j, nu) under the Weyl group action generated by
// Ws1 = [[-1/2, 3/2], [1/2, 1/2]] and Ws2 = [[-1/2, -3/2], [-1/2, 1/2]];
// the group is S3, so the orbit has 1, 2, 3, or 6 elements.
std::vector<SpectralPair> weyl_orbit(cplx j, cplx nu);

// Generic / integral dichotomy of the orbit.
enum class ParamClass { Generic, Integral };
ParamClass classify_param(int j, cplx nu);

// Orbit filtered to Re nu >= 0; the non-abelian variant additionally keeps
// only integer-j elements with sign(ell) (2j - d) + 3 <= 0.
std::vector<SpectralPair> orbit_plus(cplx j, cplx nu);
std::vector<SpectralPair> orbit_plus_n(cplx j, cplx nu,
                                       const NonAbelianOrder& order);

// Hermite index and Whittaker parameter for the one-dimensional K-type:
// m0 = sign(ell) (d - 2j)/6 - 1/2, kappa = -m0 - (j sign(ell) + 1)/2.
// NotRepresented when m0 is not a nonnegative integer.
struct NonAbIndices {
    long m0 = 0;
    real kappa = 0;
};
NonAbIndices nonabelian_indices(int j, const NonAbelianOrder& order);

// Per-component indices for higher-dimensional minimal K-types:
// r0(h) = (h - d)/3 + sign(ell), m(h,r) = sign(ell) (r - r0)/2,
// s(r) = (h - r)/4, kappa(r) = -m(h,r) - sign(ell) s(r) - 1/2.
// m may come out negative or non-integral; the caller filters.
struct HighDimIndices {
    real m = 0;
    real kappa = 0;
    real s = 0;
};
HighDimIndices highdim_indices(int h, int r, const NonAbelianOrder& order);

// Isomorphism-class catalog.
enum class IsoFamily {
    UnitaryPS,
    Complementary,
    LargeDS,
    HoloDS,
    AntiholoDS,
    ThinPlus,
    ThinMinus
};
struct IsoClass {
    IsoFamily family;
    int j = 0;
    cplx nu0{0};
    int k = 0;  // thin families only (k >= -1)
};
struct IsoRecord {
    IsoFamily family;
    int j = 0;
    cplx nu0{0};
    int h0 = 0;
    int p0 = 0;
    // thin families carry a fixed sign of ell and Hermite offset m0 = k+1
    bool has_eps = false;
    int eps = 0;
    long m0 = 0;
};
// Validates the Table-1 constraints of the family and fills in (h0, p0);
// OutOfRange names the violated constraint.
IsoRecord iso_catalog(const IsoClass& c);

// Casimir eigenvalue lambda_2 = nu^2 - 4 + j^2/3, a Weyl-orbit invariant.
cplx casimir_eigenvalue(cplx j, cplx nu);

} // namespace su21

#endif
