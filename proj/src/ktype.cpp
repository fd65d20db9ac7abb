#include "su21/ktype.hpp"

#include "su21/group.hpp"

#include <cmath>
#include <vector>

namespace su21 {

namespace {

real binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    real b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

cplx ipow(cplx z, int n) {
    cplx r = 1;
    for (int i = 0; i < n; ++i) r *= z;
    return r;
}

// Gauss-Legendre nodes/weights on [-1, 1], Newton iteration on P_n.
struct GLRule {
    std::vector<real> x, w;
};
GLRule gauss_legendre(int n) {
    GLRule g;
    g.x.resize(n);
    g.w.resize(n);
    for (int i = 0; i < n; ++i) {
        real t = std::cos(PI * (i + real(0.75)) / (n + real(0.5)));
        for (int it = 0; it < 100; ++it) {
            real p0 = 1, p1 = t;
            for (int j = 2; j <= n; ++j) {
                real p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            real dp = n * (t * p1 - p0) / (t * t - 1);
            real dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-16) break;
        }
        real p0 = 1, p1 = t;
        for (int j = 2; j <= n; ++j) {
            real p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        real dp = n * (t * p1 - p0) / (t * t - 1);
        g.x[i] = t;
        g.w[i] = 2 / ((1 - t * t) * dp * dp);
    }
    return g;
}

} // namespace

bool kindex_valid(const KIndex& idx) {
    auto par = [](int a, int b) { return ((a - b) % 2) == 0; };
    return idx.p >= 0 && par(idx.h, idx.p) && par(idx.p, idx.r) &&
           par(idx.p, idx.q) && std::abs(idx.r) <= idx.p &&
           std::abs(idx.q) <= idx.p;
}

KPoint kpoint_from(const Mat3& k, real tol) {
    KPoint p{k(0, 0), k(0, 1), k(1, 0), k(1, 1), k(2, 2)};
    real off = std::abs(k(0, 2)) + std::abs(k(1, 2)) +
               std::abs(k(2, 0)) + std::abs(k(2, 1));
    if (off > tol) throw NotInGroup("kpoint_from: off-block entries nonzero");
    cplx det2 = p.a * p.d - p.b * p.c;
    if (std::abs(p.delta * det2 - cplx(1)) > tol)
        throw NotInGroup("kpoint_from: delta * det(u) != 1");
    Mat3 u = k * herm_conj(k);
    if (max_abs_diff(u, Mat3::identity()) > tol)
        throw NotUnitary("kpoint_from: matrix is not unitary");
    return p;
}

Mat3 kpoint_mat(const KPoint& k) {
    Mat3 m{};
    m(0, 0) = k.a;
    m(0, 1) = k.b;
    m(1, 0) = k.c;
    m(1, 1) = k.d;
    m(2, 2) = k.delta;
    return m;
}

cplx kpoly_eval(const KIndex& idx, const KPoint& k) {
    if (!kindex_valid(idx)) throw BadIndex("kpoly_eval: invalid KIndex");
    int p1 = (idx.p - idx.q) / 2;  // degree of (a x + c)
    int p2 = (idx.p + idx.q) / 2;  // degree of (b x + d)
    int n = (idx.p - idx.r) / 2;   // wanted power of x
    cplx coeff = 0;
    for (int i = std::max(0, n - p2); i <= std::min(p1, n); ++i) {
        int j = n - i;
        coeff += binom(p1, i) * binom(p2, j) * ipow(k.a, i) *
                 ipow(k.c, p1 - i) * ipow(k.b, j) * ipow(k.d, p2 - j);
    }
    int e = (idx.h + idx.p) / 2;
    cplx dpow = e >= 0 ? ipow(k.delta, e) : cplx(1) / ipow(k.delta, -e);
    return dpow * coeff;
}

cplx k_integrate(const std::function<cplx(const KPoint&)>& f, int order) {
    if (order < 2) throw BadParameter("k_integrate: order too small");
    // SU(2) Haar in the coordinates alpha = cos(chi) e^{i phi1},
    // beta = sin(chi) e^{i phi2} is (1/2 pi^2) sin(chi) cos(chi)
    // dchi dphi1 dphi2; substituting u = sin^2(chi) turns it into
    // du * (dphi1/2pi) * (dphi2/2pi) with u in [0,1], total mass 1.
    GLRule gu = gauss_legendre(order);
    int nphi = 2 * order;  // trapezoid, exact for trig polynomials < nphi
    int neta = 2 * order;
    cplx total = 0;
    for (int iu = 0; iu < order; ++iu) {
        real u = (gu.x[iu] + 1) / 2;  // node in [0,1]
        real wu = gu.w[iu] / 2;
        real cchi = std::sqrt(1 - u), schi = std::sqrt(u);
        for (int i1 = 0; i1 < nphi; ++i1) {
            real phi1 = 2 * PI * i1 / nphi;
            cplx alpha = cchi * std::exp(cplx(0, phi1));
            for (int i2 = 0; i2 < nphi; ++i2) {
                real phi2 = 2 * PI * i2 / nphi;
                cplx beta = schi * std::exp(cplx(0, phi2));
                cplx inner = 0;
                for (int ie = 0; ie < neta; ++ie) {
                    cplx eta = std::exp(cplx(0, 2 * PI * ie / neta));
                    KPoint k{eta * alpha, eta * beta, -eta * std::conj(beta),
                             eta * std::conj(alpha),
                             cplx(1) / (eta * eta)};
                    inner += f(k);
                }
                total += wu * inner / cplx(real(neta) * nphi * nphi);
            }
        }
    }
    return total;
}

Mat3 lie_exp(LieTag X, real t) {
    Mat3 m = Mat3::identity();
    switch (X) {
    case LieTag::X0:
        return mk_n(0, t / 2);
    case LieTag::X1:
        return mk_n(cplx(t, 0), 0);
    case LieTag::X2:
        return mk_n(cplx(0, t), 0);
    case LieTag::Hr:
        return mk_a(std::exp(t));
    case LieTag::Hi:
        return mk_m(std::exp(cplx(0, t)));
    case LieTag::W0:
        m(0, 0) = std::exp(cplx(0, t));
        m(1, 1) = std::exp(cplx(0, -t));
        return m;
    case LieTag::W1:
        m(0, 0) = m(1, 1) = std::cos(t);
        m(0, 1) = std::sin(t);
        m(1, 0) = -std::sin(t);
        return m;
    case LieTag::W2:
        m(0, 0) = m(1, 1) = std::cos(t);
        m(0, 1) = m(1, 0) = cplx(0, 1) * std::sin(t);
        return m;
    case LieTag::CKi:
        // CK_i = 3 W0 - 2 H_i: exp(t CK_i) = diag(e^{it}, e^{it}, e^{-2it})
        m(0, 0) = m(1, 1) = std::exp(cplx(0, t));
        m(2, 2) = std::exp(cplx(0, -2 * t));
        return m;
    }
    throw BadParameter("lie_exp: unknown tag");
}

namespace {

cplx right_derivative(const KIndex& idx, const KPoint& k, LieTag X) {
    Mat3 km = kpoint_mat(k);
    auto val = [&](real t) {
        return kpoly_eval(idx, kpoint_from(km * lie_exp(X, t), 1e-8));
    };
    auto central = [&](real h) { return (val(h) - val(-h)) / (2 * h); };
    cplx d1 = central(1e-3), d2 = central(5e-4);
    return (cplx(4) * d2 - d1) / cplx(3);
}

} // namespace

cplx weight_action(WeightTag X, const KIndex& idx, const KPoint& k) {
    if (!kindex_valid(idx)) throw BadIndex("weight_action: invalid KIndex");
    switch (X) {
    case WeightTag::CKi:
        return right_derivative(idx, k, LieTag::CKi);
    case WeightTag::W0:
        return right_derivative(idx, k, LieTag::W0);
    case WeightTag::W1:
        return right_derivative(idx, k, LieTag::W1);
    case WeightTag::W2:
        return right_derivative(idx, k, LieTag::W2);
    case WeightTag::Z12:
        return right_derivative(idx, k, LieTag::W1) -
               I_UNIT * right_derivative(idx, k, LieTag::W2);
    case WeightTag::Z21:
        return right_derivative(idx, k, LieTag::W1) +
               I_UNIT * right_derivative(idx, k, LieTag::W2);
    }
    throw BadParameter("weight_action: unknown tag");
}

} // namespace su21
