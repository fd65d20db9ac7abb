#include "su21/fourier.hpp"

#include <cmath>
#include <cstdlib>

#include "su21/specfun.hpp"

namespace su21 {

namespace {

cplx ipow_unit(cplx z, long n) {
    // z^n for |z| = 1 modulus, n possibly negative
    cplx r = 1;
    cplx base = (n >= 0) ? z : cplx(1) / z;
    long m = std::labs(n);
    for (long i = 0; i < m; ++i) r *= base;
    return r;
}

real factorial_r(long n) {
    real r = 1;
    for (long i = 2; i <= n; ++i) r *= real(i);
    return r;
}

std::function<cplx(const NPoint&)> abelian_nfactor(const AbelianOrder& o) {
    cplx beta = o.beta.to_cplx();
    return [beta](const NPoint& n) { return character_eval(beta, n); };
}

std::function<cplx(const NPoint&)> theta_nfactor(const NonAbelianOrder& o,
                                                 long m) {
    real ell = o.ell;
    long c = o.c;
    int mi = static_cast<int>(m);
    return [ell, c, mi](const NPoint& n) {
        return theta_eval_hermite(ell, c, mi, n);
    };
}

// Radial builders.  coef multiplies the whole factor.

// coef * t^pow * B_nu(a t), B = K or I
void set_bessel_radial(FTComponent& comp, bool use_k, cplx coef, int pow,
                       cplx nu, real a) {
    comp.radial = [use_k, coef, pow, nu, a](real t) {
        cplx b = use_k ? bessel_k(nu, a * t) : bessel_i(nu, a * t);
        return coef * std::pow(t, pow) * b;
    };
    comp.radial_dt = [use_k, coef, pow, nu, a](real t) {
        cplx b = use_k ? bessel_k(nu, a * t) : bessel_i(nu, a * t);
        cplx db = use_k ? bessel_k_dx(nu, a * t) : bessel_i_dx(nu, a * t);
        return coef * (real(pow) * std::pow(t, pow - 1) * b +
                       std::pow(t, pow) * a * db);
    };
}

// coef * t^pow * F_{kappa,s}(a t^2), F = W, M or V
enum class WhitKind { W, M, V };
void set_whittaker_radial(FTComponent& comp, WhitKind wk, cplx coef, int pow,
                          cplx kappa, cplx s, real a) {
    auto val = [wk](cplx kp, cplx sp, real x) {
        switch (wk) {
            case WhitKind::W: return whittaker_w(kp, sp, x);
            case WhitKind::M: return whittaker_m(kp, sp, x);
            default: return whittaker_v(kp, sp, x);
        }
    };
    auto dval = [wk](cplx kp, cplx sp, real x) {
        switch (wk) {
            case WhitKind::W: return whittaker_w_dx(kp, sp, x);
            case WhitKind::M: return whittaker_m_dx(kp, sp, x);
            default: return whittaker_v_dx(kp, sp, x);
        }
    };
    comp.radial = [val, coef, pow, kappa, s, a](real t) {
        return coef * std::pow(t, pow) * val(kappa, s, a * t * t);
    };
    comp.radial_dt = [val, dval, coef, pow, kappa, s, a](real t) {
        real x = a * t * t;
        return coef * (real(pow) * std::pow(t, pow - 1) * val(kappa, s, x) +
                       std::pow(t, pow) * real(2) * a * t * dval(kappa, s, x));
    };
}

FourierTermFunction make_1d(const FourierTermOrder& order, FTKind kind, int j,
                            cplx nu) {
    FourierTermFunction f;
    f.order = order;
    f.kind = kind;
    f.h = 2 * j;
    f.p = 0;
    f.q = 0;
    f.j = cplx(real(j));
    f.nu = nu;
    FTComponent comp;
    comp.r = 0;
    if (std::holds_alternative<AbelianOrder>(order)) {
        if (kind == FTKind::Upsilon)
            throw BadParameter("upsilon_1d: order must be non-abelian");
        const auto& ao = std::get<AbelianOrder>(order);
        if (ao.beta.to_cplx() == cplx(0))
            throw BadParameter("make_1d: beta must be nonzero");
        comp.nfactor = abelian_nfactor(ao);
        real a = 2 * PI * std::abs(ao.beta.to_cplx());
        set_bessel_radial(comp, kind == FTKind::Omega, cplx(1), 2, nu, a);
    } else {
        const auto& no = std::get<NonAbelianOrder>(order);
        check_order(no);
        NonAbIndices idx = nonabelian_indices(j, no);
        comp.nfactor = theta_nfactor(no, idx.m0);
        real a = 2 * PI * std::fabs(no.ell);
        WhitKind wk = kind == FTKind::Omega  ? WhitKind::W
                      : kind == FTKind::Mu   ? WhitKind::M
                                             : WhitKind::V;
        set_whittaker_radial(comp, wk, cplx(1), 1, cplx(idx.kappa),
                             nu / real(2), a);
    }
    f.components.push_back(std::move(comp));
    return f;
}

FourierTermFunction make_hd(const FourierTermOrder& order, const IsoClass& cls,
                            int q, FTKind kind) {
    IsoRecord rec = iso_catalog(cls);
    if (rec.p0 < 1)
        throw OutOfRange("make_hd: class has one-dimensional minimal K-type");
    int h = rec.h0, p = rec.p0;
    if ((q - p) % 2 != 0 || std::abs(q) > p)
        throw OutOfRange("make_hd: weight q must satisfy q == p (mod 2), |q| <= p");

    FourierTermFunction f;
    f.order = order;
    f.kind = kind;
    f.h = h;
    f.p = p;
    f.q = q;
    f.j = cplx(real(-h));
    f.nu = cplx(real(p));

    for (int r = -p; r <= p; r += 2) {
        FTComponent comp;
        comp.r = r;
        if (std::holds_alternative<AbelianOrder>(order)) {
            const auto& ao = std::get<AbelianOrder>(order);
            cplx beta = ao.beta.to_cplx();
            if (beta == cplx(0))
                throw BadParameter("make_hd: beta must be nonzero");
            comp.nfactor = abelian_nfactor(ao);
            // phase base beta/|beta| for Omega, -beta/|beta| for Mu; the only
            // choices making the sum a Casimir eigenfunction in the fixed
            // chi_beta and Phi conventions (certified numerically against the
            // eigenvalue, for several beta)
            cplx phase = (kind == FTKind::Omega ? real(1) : real(-1)) * beta /
                         std::abs(beta);
            cplx coef = ipow_unit(phase, (r + p) / 2);
            cplx bnu = cplx(std::fabs(real(h - r)) / 2);
            set_bessel_radial(comp, kind == FTKind::Omega, coef, 2 + p, bnu,
                              2 * PI * std::abs(beta));
        } else {
            const auto& no = std::get<NonAbelianOrder>(order);
            check_order(no);
            if (rec.has_eps && (no.ell > 0 ? 1 : -1) != rec.eps)
                throw OutOfRange("make_hd: sign of ell conflicts with the class");
            HighDimIndices hi = highdim_indices(h, r, no);
            long m = std::lround(hi.m);
            if (hi.m < -1e-9 || std::fabs(hi.m - real(m)) > 1e-9)
                continue;  // component absent unless m(h,r) is in Z_{>=0}
            comp.nfactor = theta_nfactor(no, m);
            real a = 2 * PI * std::fabs(no.ell);
            real sm = std::fabs(hi.s);
            if (kind == FTKind::Omega) {
                cplx coef = ipow_unit(I_UNIT, m) * std::sqrt(factorial_r(m));
                set_whittaker_radial(comp, WhitKind::W, coef, 1 + p,
                                     cplx(hi.kappa), cplx(hi.s), a);
            } else {
                cplx coef = hd_mu_coefficient(m, hi.kappa, sm);
                set_whittaker_radial(comp, WhitKind::M, coef, 1 + p,
                                     cplx(hi.kappa), cplx(sm), a);
            }
        }
        f.components.push_back(std::move(comp));
    }
    return f;
}

} // namespace

cplx hd_mu_coefficient(long m, real kappa, real s_abs) {
    return -std::exp(I_UNIT * PI * (real(m) - kappa)) *
           gamma_c(cplx(real(0.5) + s_abs - kappa)) /
           (std::sqrt(factorial_r(m)) * gamma_c(cplx(2 * s_abs + 1)));
}

cplx FourierTermFunction::eval(const NPoint& n, real t, const KPoint& k) const {
    cplx sum = 0;
    for (const auto& comp : components) {
        KIndex idx{h, p, comp.r, q};
        sum += comp.nfactor(n) * comp.radial(t) * kpoly_eval(idx, k);
    }
    return sum;
}

cplx FourierTermFunction::eval_mat(const Mat3& g) const {
    Iwasawa iw = iwasawa(g, 1e-8);
    KPoint kp = kpoint_from(iw.k, 1e-6);
    return eval(NPoint{iw.b, iw.r}, iw.t, kp);
}

FourierTermFunction mu_1d(const FourierTermOrder& order, int j, cplx nu) {
    return make_1d(order, FTKind::Mu, j, nu);
}

FourierTermFunction omega_1d(const FourierTermOrder& order, int j, cplx nu) {
    return make_1d(order, FTKind::Omega, j, nu);
}

FourierTermFunction upsilon_1d(const NonAbelianOrder& order, int j, cplx nu) {
    return make_1d(FourierTermOrder(order), FTKind::Upsilon, j, nu);
}

FourierTermFunction mu_hd(const FourierTermOrder& order, const IsoClass& cls,
                          int q) {
    return make_hd(order, cls, q, FTKind::Mu);
}

FourierTermFunction omega_hd(const FourierTermOrder& order, const IsoClass& cls,
                             int q) {
    return make_hd(order, cls, q, FTKind::Omega);
}

namespace {

// A complex Lie-algebra element as coefficients over the real basis.
struct CVec {
    std::array<cplx, 9> c{};  // indexed by LieTag order
};
CVec cv(std::initializer_list<std::pair<LieTag, cplx>> terms) {
    CVec v;
    for (const auto& [tag, coef] : terms) v.c[static_cast<int>(tag)] = coef;
    return v;
}

struct CasimirWork {
    const std::function<cplx(const Mat3&)>& f;
    const Mat3& g;

    // fourth-order first-derivative stencil weights at offsets {-2,-1,1,2}*h
    cplx d1(LieTag X, real hstep) const {
        return (f(g * lie_exp(X, -2 * hstep)) -
                real(8) * f(g * lie_exp(X, -hstep)) +
                real(8) * f(g * lie_exp(X, hstep)) -
                f(g * lie_exp(X, 2 * hstep))) /
               (12 * hstep);
    }
    cplx d2(LieTag X, LieTag Y, real hstep) const {
        static const real off[4] = {-2, -1, 1, 2};
        static const real w[4] = {1.0 / 12, -8.0 / 12, 8.0 / 12, -1.0 / 12};
        cplx sum = 0;
        for (int i = 0; i < 4; ++i) {
            Mat3 gx = g * lie_exp(X, off[i] * hstep);
            for (int jj = 0; jj < 4; ++jj)
                sum += w[i] * w[jj] * f(gx * lie_exp(Y, off[jj] * hstep));
        }
        return sum / (hstep * hstep);
    }
    // Monomial XY as nested right derivatives.
    cplx mono(const CVec& X, const CVec& Y, real hstep) const {
        cplx sum = 0;
        for (int i = 0; i < 9; ++i) {
            if (X.c[i] == cplx(0)) continue;
            for (int jj = 0; jj < 9; ++jj) {
                if (Y.c[jj] == cplx(0)) continue;
                sum += X.c[i] * Y.c[jj] *
                       d2(static_cast<LieTag>(i), static_cast<LieTag>(jj),
                          hstep);
            }
        }
        return sum;
    }
    cplx casimir_at(real hstep) const {
        const CVec cki = cv({{LieTag::CKi, 1}});
        const CVec w0 = cv({{LieTag::W0, 1}});
        const CVec z12 = cv({{LieTag::W1, 1}, {LieTag::W2, -I_UNIT}});
        const CVec z21 = cv({{LieTag::W1, 1}, {LieTag::W2, I_UNIT}});
        const CVec z13 = cv({{LieTag::Hr, real(0.5)},
                             {LieTag::X0, I_UNIT},
                             {LieTag::W0, -I_UNIT / real(4)},
                             {LieTag::CKi, -I_UNIT / real(4)}});
        const CVec z31 = cv({{LieTag::Hr, real(0.5)},
                             {LieTag::X0, -I_UNIT},
                             {LieTag::W0, I_UNIT / real(4)},
                             {LieTag::CKi, I_UNIT / real(4)}});
        const CVec z23 = cv({{LieTag::X1, real(0.5)},
                             {LieTag::W1, real(-0.5)},
                             {LieTag::X2, I_UNIT / real(2)},
                             {LieTag::W2, -I_UNIT / real(2)}});
        const CVec z32 = cv({{LieTag::X1, real(0.5)},
                             {LieTag::W1, real(-0.5)},
                             {LieTag::X2, -I_UNIT / real(2)},
                             {LieTag::W2, I_UNIT / real(2)}});
        cplx res = -mono(cki, cki, hstep) / real(3);
        res += real(2) * I_UNIT * d1(LieTag::CKi, hstep);
        res -= mono(w0, w0, hstep);
        res += real(2) * I_UNIT * d1(LieTag::W0, hstep);
        res -= mono(z12, z21, hstep);
        res += real(4) * mono(z13, z31, hstep);
        res += real(4) * mono(z23, z32, hstep);
        return res;
    }
};

} // namespace

cplx casimir_apply_fn(const std::function<cplx(const Mat3&)>& f,
                      const Mat3& g) {
    CasimirWork work{f, g};
    const real h1 = 1e-3, h2 = 5e-4;
    cplx c1 = work.casimir_at(h1);
    cplx c2 = work.casimir_at(h2);
    // fourth-order stencils, so the Richardson step removes the h^4 term
    cplx res = (real(16) * c2 - c1) / real(15);
    real scale = 1 + std::max(std::abs(res), std::abs(f(g)));
    if (std::abs(c2 - c1) > 1e-4 * scale)
        throw PrecisionLoss("casimir_apply: Richardson levels disagree");
    return res;
}

cplx casimir_apply(const FourierTermFunction& f, const Mat3& g) {
    return casimir_apply_fn([&f](const Mat3& gg) { return f.eval_mat(gg); }, g);
}

} // namespace su21
