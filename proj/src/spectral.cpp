#include "su21/spectral.hpp"

#include <cmath>

namespace su21 {

namespace {

const real kTol = 1e-9;

SpectralPair apply_ws1(const SpectralPair& p) {
    return {cplx(-0.5) * p.j + cplx(1.5) * p.nu,
            cplx(0.5) * p.j + cplx(0.5) * p.nu};
}
SpectralPair apply_ws2(const SpectralPair& p) {
    return {cplx(-0.5) * p.j - cplx(1.5) * p.nu,
            cplx(-0.5) * p.j + cplx(0.5) * p.nu};
}

bool close(const SpectralPair& a, const SpectralPair& b) {
    return std::abs(a.j - b.j) < kTol && std::abs(a.nu - b.nu) < kTol;
}

bool is_int(cplx z, long& n) {
    n = std::lround(z.real());
    return std::abs(z - cplx(real(1.0) * n)) < kTol;
}

int sign_ell(const NonAbelianOrder& order) { return order.ell > 0 ? 1 : -1; }

// nu lies in j + 2Z (both real integers of the same parity)
bool integral_pair(const SpectralPair& p) {
    long j, nu;
    if (!is_int(p.j, j) || !is_int(p.nu, nu)) return false;
    return ((nu - j) % 2) == 0;
}

} // namespace

void check_order(const NonAbelianOrder& order) {
    if (order.ell == 0) throw BadParameter("NonAbelianOrder: ell must be nonzero");
    long two_ell = std::lround(2 * std::abs(order.ell));
    if (std::abs(2 * std::abs(order.ell) - two_ell) > 1e-12)
        throw BadParameter("NonAbelianOrder: 2 ell must be integral");
    if (order.c < 0 || order.c >= two_ell)
        throw BadParameter("NonAbelianOrder: need 0 <= c < 2|ell|");
    if ((order.d % 2) == 0) throw BadParameter("NonAbelianOrder: d must be odd");
}

std::vector<SpectralPair> weyl_orbit(cplx j, cplx nu) {
    std::vector<SpectralPair> orbit{{j, nu}};
    // closure under the two generators; the orbit has at most 6 elements
    for (size_t i = 0; i < orbit.size(); ++i) {
        for (SpectralPair next : {apply_ws1(orbit[i]), apply_ws2(orbit[i])}) {
            bool seen = false;
            for (const auto& p : orbit) {
                if (close(p, next)) {
                    seen = true;
                    break;
                }
            }
            if (!seen) orbit.push_back(next);
        }
        if (orbit.size() > 6)
            throw NonConvergence("weyl_orbit: orbit exceeded size 6");
    }
    return orbit;
}

ParamClass classify_param(int j, cplx nu) {
    auto orbit = weyl_orbit(cplx(real(1.0) * j), nu);
    if (orbit.size() == 1 && close(orbit[0], {0, 0})) return ParamClass::Generic;
    int n_integral = 0, n_integer_j = 0;
    for (const auto& p : orbit) {
        long jj;
        if (is_int(p.j, jj)) ++n_integer_j;
        if (integral_pair(p)) ++n_integral;
    }
    if (n_integral == 0) return ParamClass::Generic;
    // integrality propagates to the whole orbit; anything else is a bug
    if (n_integral != static_cast<int>(orbit.size()) ||
        n_integer_j != static_cast<int>(orbit.size()))
        throw MixedOrbit("classify_param: orbit mixes integral and generic");
    return ParamClass::Integral;
}

std::vector<SpectralPair> orbit_plus(cplx j, cplx nu) {
    std::vector<SpectralPair> out;
    for (const auto& p : weyl_orbit(j, nu))
        if (p.nu.real() >= -kTol) out.push_back(p);
    return out;
}

std::vector<SpectralPair> orbit_plus_n(cplx j, cplx nu,
                                       const NonAbelianOrder& order) {
    check_order(order);
    std::vector<SpectralPair> out;
    for (const auto& p : orbit_plus(j, nu)) {
        long jj;
        if (!is_int(p.j, jj)) continue;
        if (sign_ell(order) * (2 * jj - order.d) + 3 <= 0) out.push_back(p);
    }
    return out;
}

NonAbIndices nonabelian_indices(int j, const NonAbelianOrder& order) {
    check_order(order);
    real m0 = sign_ell(order) * (order.d - real(2.0) * j) / 6 - real(0.5);
    long m0i = std::lround(m0);
    if (std::abs(m0 - m0i) > kTol || m0i < 0)
        throw NotRepresented("nonabelian_indices: m0 not a nonnegative integer");
    real kappa = -m0 - (real(1.0) * j * sign_ell(order) + 1) / 2;
    return {m0i, kappa};
}

HighDimIndices highdim_indices(int h, int r, const NonAbelianOrder& order) {
    check_order(order);
    if (((h - r) % 2) != 0)
        throw BadIndex("highdim_indices: need h == r (mod 2)");
    int eps = sign_ell(order);
    real r0 = (h - real(1.0) * order.d) / 3 + eps;
    real m = eps * (r - r0) / 2;
    real s = (h - real(1.0) * r) / 4;
    real kappa = -m - eps * s - real(0.5);
    return {m, kappa, s};
}

namespace {

bool real_int(cplx z, long& n) {
    n = std::lround(z.real());
    return std::abs(z.imag()) < 1e-12 && std::abs(z.real() - n) < 1e-12;
}

} // namespace

IsoRecord iso_catalog(const IsoClass& c) {
    IsoRecord rec;
    rec.family = c.family;
    rec.j = c.j;
    rec.nu0 = c.nu0;
    long n;
    switch (c.family) {
    case IsoFamily::UnitaryPS:
        if (std::abs(c.nu0.real()) > 1e-12 || c.nu0.imag() < -1e-12)
            throw OutOfRange("UnitaryPS: need nu0 in i[0,inf)");
        if (std::abs(c.nu0) < 1e-12 && c.j != 0 && (c.j % 2) == 0)
            throw OutOfRange("UnitaryPS: nu0 = 0 needs j = 0 or j odd");
        rec.h0 = 2 * c.j;
        rec.p0 = 0;
        return rec;
    case IsoFamily::Complementary: {
        real x = c.nu0.real();
        if (std::abs(c.nu0.imag()) > 1e-12)
            throw OutOfRange("Complementary: nu0 must be real");
        bool ok = (c.j == 0 && x > 0 && x < 2) ||
                  ((std::abs(c.j) % 2) == 1 && x > 0 && x < 1);
        if (!ok)
            throw OutOfRange("Complementary: need 0<nu0<2, j=0 or 0<nu0<1, j odd");
        rec.h0 = 2 * c.j;
        rec.p0 = 0;
        return rec;
    }
    case IsoFamily::LargeDS:
        if (!real_int(c.nu0, n) || ((n - c.j) % 2) != 0)
            throw OutOfRange("LargeDS: need nu0 = j (mod 2)");
        if (n < std::abs(c.j) || n < 1)
            throw OutOfRange("LargeDS: need nu0 >= |j| and nu0 >= 1");
        rec.h0 = -c.j;
        rec.p0 = static_cast<int>(n);
        return rec;
    case IsoFamily::HoloDS:
        if (!real_int(c.nu0, n) || ((n - c.j) % 2) != 0)
            throw OutOfRange("HoloDS: need nu0 = j (mod 2)");
        if (n < 0 || n > c.j - 2) throw OutOfRange("HoloDS: need 0 <= nu0 <= j-2");
        rec.h0 = 2 * c.j;
        rec.p0 = 0;
        return rec;
    case IsoFamily::AntiholoDS:
        if (!real_int(c.nu0, n) || ((n - c.j) % 2) != 0)
            throw OutOfRange("AntiholoDS: need nu0 = j (mod 2)");
        if (n < 0 || n > -c.j - 2)
            throw OutOfRange("AntiholoDS: need 0 <= nu0 <= -j-2");
        rec.h0 = 2 * c.j;
        rec.p0 = 0;
        return rec;
    case IsoFamily::ThinPlus:
        if (c.k < -1) throw OutOfRange("ThinPlus: need k >= -1");
        rec.nu0 = 1;
        rec.has_eps = true;
        rec.eps = -1;
        rec.m0 = c.k + 1;
        if (c.k == -1) {
            rec.j = 1;
            rec.h0 = 2;
            rec.p0 = 0;
        } else {
            rec.j = 3 + 2 * c.k;
            rec.h0 = c.k + 3;
            rec.p0 = c.k + 1;
        }
        return rec;
    case IsoFamily::ThinMinus:
        if (c.k < -1) throw OutOfRange("ThinMinus: need k >= -1");
        rec.nu0 = 1;
        rec.has_eps = true;
        rec.eps = 1;
        rec.m0 = c.k + 1;
        if (c.k == -1) {
            rec.j = -1;
            rec.h0 = -2;
            rec.p0 = 0;
        } else {
            rec.j = -3 - 2 * c.k;
            rec.h0 = -c.k - 3;
            rec.p0 = c.k + 1;
        }
        return rec;
    }
    throw BadParameter("iso_catalog: unknown family");
}

cplx casimir_eigenvalue(cplx j, cplx nu) {
    return nu * nu - cplx(4) + j * j / cplx(3);
}

} // namespace su21
