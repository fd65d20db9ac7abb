#include "su21/heisenberg.hpp"

#include <cmath>

namespace su21 {

NPoint n_mul(const NPoint& n1, const NPoint& n2) {
    return {n1.b + n2.b, n1.r + n2.r + std::imag(std::conj(n1.b) * n2.b)};
}

NPoint n_inv(const NPoint& n) { return {-n.b, -n.r}; }

cplx character_eval(cplx beta, const NPoint& n) {
    return std::exp(cplx(0, 2 * PI * std::imag(std::conj(beta) * n.b)));
}

RealFn schrodinger_act(real ell, const NPoint& n, RealFn phi) {
    real x = n.b.real(), y = n.b.imag(), r = n.r;
    return [=](real xi) {
        return std::exp(cplx(0, 2 * PI * ell * (r - 2 * xi * x - x * y))) *
               phi(xi + y);
    };
}

real hermite_eval(real ell, int k, real xi) {
    if (ell == 0) throw BadParameter("hermite_eval: ell must be nonzero");
    if (k < 0 || k > 64) throw BadIndex("hermite_eval: need 0 <= k <= 64");
    real al = std::abs(ell);
    real u = std::sqrt(4 * PI * al) * xi;
    // normalized Hermite functions psi_k(u) with the stable three-term
    // recurrence; h_{ell,k}(xi) = (4 pi |ell|)^{1/4} psi_k(u).
    real p0 = std::pow(PI, real(-0.25)) * std::exp(-u * u / 2);
    if (k == 0) return std::pow(4 * PI * al, real(0.25)) * p0;
    real p1 = std::sqrt(real(2)) * u * p0;
    for (int j = 2; j <= k; ++j) {
        real p2 = std::sqrt(real(2) / j) * u * p1 -
                  std::sqrt(real(j - 1) / j) * p0;
        p0 = p1;
        p1 = p2;
    }
    return std::pow(4 * PI * al, real(0.25)) * p1;
}

cplx theta_eval(real ell, long c, const RealFn& phi, const NPoint& n,
                int kmax) {
    if (ell == 0) throw BadParameter("theta_eval: ell must be nonzero");
    real x = n.b.real(), y = n.b.imag(), r = n.r;
    cplx phase_r = std::exp(cplx(0, 2 * PI * ell * r));
    real base = c / (2 * ell) + y;
    long k0 = std::lround(-base);
    auto term = [&](long k) {
        cplx osc = std::exp(cplx(0, -2 * PI * ell * x * (c / ell + 2.0 * k + y)));
        return phi(base + k) * osc;
    };
    cplx sum = term(k0);
    real scale = std::abs(sum);
    for (int dir = -1; dir <= 1; dir += 2) {
        int small_streak = 0;
        for (long i = 1; i <= kmax; ++i) {
            cplx t = term(k0 + dir * i);
            sum += t;
            scale = std::max(scale, std::abs(t));
            if (std::abs(t) < 1e-18 * (scale + 1e-300)) {
                if (++small_streak >= 3) break;
            } else {
                small_streak = 0;
            }
            if (i == kmax)
                throw TruncationFailure("theta_eval: summand tail did not decay");
        }
    }
    return phase_r * sum;
}

cplx theta_eval_hermite(real ell, long c, int m, const NPoint& n) {
    return theta_eval(
        ell, c, [=](real xi) { return cplx(hermite_eval(ell, m, xi)); }, n);
}

cplx n_average(int sigma, const std::function<cplx(const NPoint&)>& f,
               const NGrid& grid) {
    if (sigma <= 0) throw BadParameter("n_average: sigma must be positive");
    // periodic trapezoid == uniform mean over the fundamental domain
    cplx sum = 0;
    for (int ix = 0; ix < grid.nx; ++ix)
        for (int iy = 0; iy < grid.ny; ++iy)
            for (int ir = 0; ir < grid.nr; ++ir) {
                NPoint n{cplx(real(ix) / grid.nx, real(iy) / grid.ny),
                         real(2.0) * ir / (grid.nr * sigma)};
                sum += f(n);
            }
    return sum / cplx(real(grid.nx) * grid.ny * grid.nr);
}

cplx theta_inner(real ell1, long c1, int m1, real ell2, long c2, int m2,
                 int sigma, const NGrid& grid) {
    // L^2(Lambda_sigma \ N, dn) inner product: the fundamental domain has
    // volume 2/sigma, so the integral is the mean times that volume.
    return cplx(real(2.0) / sigma) *
           n_average(
               sigma,
               [&](const NPoint& n) {
                   return theta_eval_hermite(ell1, c1, m1, n) *
                          std::conj(theta_eval_hermite(ell2, c2, m2, n));
               },
               grid);
}

std::vector<cplx> mi_transform(real ell, int m, const std::vector<cplx>& coeff) {
    real two_ell = 2 * std::abs(ell);
    long dim = std::lround(two_ell);
    if (std::abs(two_ell - dim) > 1e-12 || dim <= 0)
        throw BadParameter("mi_transform: 2|ell| must be a positive integer");
    if (coeff.size() != static_cast<size_t>(dim))
        throw BadIndex("mi_transform: coefficient vector has wrong length");
    cplx pref = std::pow(I_UNIT * cplx(ell > 0 ? 1 : -1), m) /
                std::sqrt(cplx(two_ell));
    std::vector<cplx> out(dim);
    for (long cp = 0; cp < dim; ++cp) {
        cplx s = 0;
        for (long c = 0; c < dim; ++c)
            s += coeff[c] * std::exp(cplx(0, -PI * c * cp / ell));
        out[cp] = pref * s;
    }
    return out;
}

} // namespace su21
