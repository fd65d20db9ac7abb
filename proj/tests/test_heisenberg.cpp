#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "su21/group.hpp"
#include "su21/heisenberg.hpp"
#include "su21/mat3.hpp"

using namespace su21;

namespace {

// Wide-window direct summation oracle for the theta series.
cplx oracle_theta(real ell, long c, int m, const NPoint& n) {
    real x = n.b.real(), y = n.b.imag();
    cplx sum = 0;
    for (int k = -60; k <= 60; ++k) {
        real xi = c / (2 * ell) + k + y;
        sum += hermite_eval(ell, m, xi) *
               std::exp(cplx(0, 2 * PI * ell * n.r)) *
               std::exp(cplx(0, -2 * PI * ell * x * (c / ell + 2 * k + y)));
    }
    return sum;
}

// Simpson quadrature of f on [-L, L].
template <class F>
cplx simpson(F&& f, real L, int npts) {
    int n = npts | 1;  // odd point count
    real h = 2 * L / (n - 1);
    cplx sum = 0;
    for (int i = 0; i < n; ++i) {
        real w = (i == 0 || i == n - 1) ? 1 : (i % 2 ? 4 : 2);
        sum += w * f(-L + i * h);
    }
    return sum * h / 3.0;
}

std::mt19937 rng(20240517);
real urand(real lo, real hi) {
    return std::uniform_real_distribution<real>(lo, hi)(rng);
}

} // namespace

TEST_CASE("heisenberg group law") {
    NPoint a{cplx(1, 0), 0}, b{cplx(0, 1), 0};
    NPoint ab = n_mul(a, b);
    CHECK(std::abs(ab.b - cplx(1, 1)) < 1e-15);
    CHECK(std::abs(ab.r - 1) < 1e-15);
    NPoint ba = n_mul(b, a);
    CHECK(std::abs(ba.r + 1) < 1e-15);  // non-commutativity
    // inverse
    NPoint p{cplx(0.3, -1.2), 0.7};
    NPoint e = n_mul(p, n_inv(p));
    CHECK(std::abs(e.b) < 1e-15);
    CHECK(std::abs(e.r) < 1e-15);
    // associativity and consistency with the 3x3 matrix model
    NPoint c{cplx(-0.4, 0.9), -1.3};
    NPoint lhs = n_mul(n_mul(a, p), c), rhs = n_mul(a, n_mul(p, c));
    CHECK(std::abs(lhs.b - rhs.b) < 1e-14);
    CHECK(std::abs(lhs.r - rhs.r) < 1e-14);
    Mat3 mm = mk_n(p.b, p.r) * mk_n(c.b, c.r);
    NPoint pc = n_mul(p, c);
    CHECK(max_abs_diff(mm, mk_n(pc.b, pc.r)) < 1e-12);
}

TEST_CASE("characters of N") {
    CHECK(std::abs(character_eval(cplx(1), NPoint{cplx(0, 1), 0}) - cplx(1)) < 1e-14);
    CHECK(std::abs(character_eval(cplx(1), NPoint{cplx(0, 0.25), 0}) - cplx(0, 1)) < 1e-14);
    // trivial on the center
    CHECK(std::abs(character_eval(cplx(1, 1), NPoint{0, 5}) - cplx(1)) < 1e-14);
    // unit modulus
    cplx v = character_eval(cplx(2, -1), NPoint{cplx(0.37, 0.81), 2.2});
    CHECK(std::abs(std::abs(v) - 1) < 1e-14);
}

TEST_CASE("schrodinger representation") {
    real ell = 1;
    RealFn h0 = [ell](real xi) { return cplx(hermite_eval(ell, 0, xi)); };
    // central element acts by the scalar e^{2 pi i ell r}
    RealFn g = schrodinger_act(ell, NPoint{0, 0.3}, h0);
    for (real xi : {-1.0, 0.2, 0.9}) {
        CHECK(std::abs(g(xi) - std::exp(cplx(0, 2 * PI * ell * 0.3)) * h0(xi)) < 1e-14);
    }
    // identity element acts trivially
    RealFn idf = schrodinger_act(ell, NPoint{0, 0}, h0);
    CHECK(std::abs(idf(0.4) - h0(0.4)) < 1e-15);
    // unitarity for random group elements
    for (int t = 0; t < 3; ++t) {
        NPoint n{cplx(urand(-1, 1), urand(-1, 1)), urand(-1, 1)};
        RealFn f = schrodinger_act(ell, n, h0);
        cplx nrm = simpson([&](real xi) { return cplx(std::norm(f(xi))); }, 10.0, 2001);
        CHECK(std::abs(nrm - cplx(1)) < 1e-10);
    }
}

TEST_CASE("hermite functions") {
    // h_{1/2,0}(0) = 2^{1/4}
    CHECK(std::abs(hermite_eval(0.5, 0, 0) - std::pow(2.0, 0.25)) < 1e-12);
    // explicit k = 3 profile: proportional to (2u^3 - 3u) e^{-u^2/2} in the
    // scaled variable u = sqrt(4 pi |ell|) xi, with unit L^2 norm
    {
        real ell = 1, xi = 0.37;
        real u = std::sqrt(4 * PI * ell) * xi;
        real want = std::pow(4 * PI * ell, 0.25) * std::pow(PI, -0.25) /
                    std::sqrt(48.0) * (8 * u * u * u - 12 * u) *
                    std::exp(-u * u / 2);
        CHECK(std::abs(hermite_eval(ell, 3, xi) - want) < 1e-12);
    }
    // unit norms and orthogonality via an independent quadrature oracle
    cplx n3 = simpson([](real xi) { return cplx(std::norm(hermite_eval(1, 3, xi))); },
                      8.0, 4001);
    CHECK(std::abs(n3 - cplx(1)) < 1e-10);
    cplx ip = simpson([](real xi) {
        return cplx(hermite_eval(1, 2, xi) * hermite_eval(1, 5, xi));
    }, 8.0, 4001);
    CHECK(std::abs(ip) < 1e-10);
    // the ell-scaling leaves the norm invariant
    cplx n0 = simpson([](real xi) { return cplx(std::norm(hermite_eval(3, 7, xi))); },
                      6.0, 4001);
    CHECK(std::abs(n0 - cplx(1)) < 1e-10);
}

TEST_CASE("theta series evaluation") {
    real ell = 2;
    // direct summation oracle at the identity and at random points
    CHECK(std::abs(theta_eval_hermite(ell, 0, 0, NPoint{0, 0}) -
                   oracle_theta(ell, 0, 0, NPoint{0, 0})) < 1e-12);
    for (int t = 0; t < 10; ++t) {
        long c = t % 4;
        int m = t % 3;
        NPoint n{cplx(urand(-1, 1), urand(-1, 1)), urand(-1, 1)};
        CHECK(std::abs(theta_eval_hermite(ell, c, m, n) - oracle_theta(ell, c, m, n)) < 1e-11);
    }
    // left invariance under the lattice Lambda_4: n(1,0), n(i,0), n(0,1/2)
    for (NPoint lam : {NPoint{cplx(1, 0), 0}, NPoint{cplx(0, 1), 0}, NPoint{0, 0.5}}) {
        NPoint n{cplx(0.21, -0.43), 0.87};
        cplx a = theta_eval_hermite(ell, 1, 1, n_mul(lam, n));
        cplx b = theta_eval_hermite(ell, 1, 1, n);
        CHECK(std::abs(a - b) < 1e-12);
    }
    // central transformation factor e^{2 pi i ell r}
    {
        NPoint n{cplx(0.11, 0.29), -0.41};
        real r = 0.23;
        cplx a = theta_eval_hermite(ell, 2, 0, n_mul(NPoint{0, r}, n));
        cplx b = std::exp(cplx(0, 2 * PI * ell * r)) * theta_eval_hermite(ell, 2, 0, n);
        CHECK(std::abs(a - b) < 1e-12);
    }
    // delta relations: left shift by n(1/2ell, 0) multiplies by e^{-pi i c/ell}
    // (phase read off from the theta definition: the shift adds -pi(c/ell + 2k)
    // to each summand's argument), left shift by n(i/2ell, 0) raises c by one
    for (long c : {0L, 1L, 3L}) {
        NPoint n{cplx(-0.31, 0.17), 0.53};
        cplx lhs1 = theta_eval_hermite(ell, c, 1, n_mul(NPoint{cplx(1 / (2 * ell), 0), 0}, n));
        cplx rhs1 = std::exp(cplx(0, -PI * c / ell)) * theta_eval_hermite(ell, c, 1, n);
        CHECK(std::abs(lhs1 - rhs1) < 1e-9);
        cplx lhs2 = theta_eval_hermite(ell, c, 1, n_mul(NPoint{cplx(0, 1 / (2 * ell)), 0}, n));
        cplx rhs2 = theta_eval_hermite(ell, (c + 1) % long(2 * ell), 1, n);
        CHECK(std::abs(lhs2 - rhs2) < 1e-9);
    }
    // intertwining with the Schroedinger action
    for (int t = 0; t < 3; ++t) {
        NPoint n{cplx(urand(-1, 1), urand(-1, 1)), urand(-1, 1)};
        NPoint n1{cplx(urand(-0.5, 0.5), urand(-0.5, 0.5)), urand(-0.5, 0.5)};
        RealFn h1 = [ell](real xi) { return cplx(hermite_eval(ell, 1, xi)); };
        RealFn moved = schrodinger_act(2 * PI * ell / (2 * PI), n1, h1);
        cplx lhs = theta_eval(ell, 1, moved, n);
        cplx rhs = theta_eval(ell, 1, h1, n_mul(n, n1));
        CHECK(std::abs(lhs - rhs) < 1e-9);
    }
}

TEST_CASE("theta inner products") {
    int sigma = 4;
    real ell = 2;
    // normalized self inner product (2/sigma) * ||h||^2 = 0.5
    cplx d = theta_inner(ell, 0, 0, ell, 0, 0, sigma);
    CHECK(std::abs(d - cplx(0.5)) < 1e-8);
    // distinct c classes are orthogonal
    CHECK(std::abs(theta_inner(ell, 0, 0, ell, 1, 0, sigma)) < 1e-8);
    // opposite central characters are orthogonal
    CHECK(std::abs(theta_inner(ell, 0, 0, -ell, 0, 0, sigma)) < 1e-8);
    // distinct Hermite indices are orthogonal
    CHECK(std::abs(theta_inner(ell, 0, 0, ell, 0, 1, sigma)) < 1e-8);
    // characters: Gram of sqrt(sigma/2) chi_beta over beta in Z[i] under the
    // L^2(Lambda_sigma\N, dn) pairing is the identity (the sqrt(sigma/2)
    // weights cancel the domain volume 2/sigma, leaving the plain mean), and
    // characters are orthogonal to every theta function
    std::vector<cplx> betas = {cplx(0), cplx(1), cplx(0, 1), cplx(1, 1)};
    for (size_t i = 0; i < betas.size(); ++i) {
        for (size_t j = 0; j < betas.size(); ++j) {
            cplx g = n_average(sigma, [&](const NPoint& n) {
                return character_eval(betas[i], n) *
                       std::conj(character_eval(betas[j], n));
            });
            CHECK(std::abs(g - cplx(i == j ? 1 : 0)) < 1e-10);
        }
    }
    for (cplx beta : betas) {
        cplx g = n_average(sigma, [&](const NPoint& n) {
            return theta_eval_hermite(ell, 1, 0, n) *
                   std::conj(character_eval(beta, n));
        });
        CHECK(std::abs(g) < 1e-8);
    }
}

TEST_CASE("m(i) action on theta coefficients") {
    // 1x1 case: multiplier is exactly 1
    {
        std::vector<cplx> v = {cplx(0.3, -0.8)};
        auto w = mi_transform(0.5, 0, v);
        REQUIRE(w.size() == 1);
        CHECK(std::abs(w[0] - v[0]) < 1e-14);
    }
    // the automorphism has order four
    {
        real ell = 2;
        std::vector<cplx> v(4);
        for (auto& z : v) z = cplx(urand(-1, 1), urand(-1, 1));
        auto w = v;
        for (int t = 0; t < 4; ++t) w = mi_transform(ell, 1, w);
        for (int c = 0; c < 4; ++c) CHECK(std::abs(w[c] - v[c]) < 1e-12);
    }
    // pointwise identity against the theta oracle:
    //   Theta_{ell,c}(h)(n(ib,r)) = sum_{c'} U_{c,c'} Theta_{ell,c'}(h)(n(b,r))
    {
        real ell = 2;
        int m = 1;
        for (int t = 0; t < 20; ++t) {
            NPoint n{cplx(urand(-1, 1), urand(-1, 1)), urand(-1, 1)};
            std::vector<cplx> v(4);
            for (long c = 0; c < 4; ++c) v[c] = theta_eval_hermite(ell, c, m, n);
            auto w = mi_transform(ell, m, v);
            NPoint rotated{cplx(0, 1) * n.b, n.r};
            for (long c = 0; c < 4; ++c) {
                cplx direct = theta_eval_hermite(ell, c, m, rotated);
                CHECK(std::abs(direct - w[c]) < 1e-9);
            }
        }
    }
}
