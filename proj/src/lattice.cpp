#include "su21/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "su21/maass_selberg.hpp"
#include "su21/spectral.hpp"

namespace su21 {

namespace {

GMat3 gmat_diag(GaussInt a, GaussInt b, GaussInt c) {
    GMat3 m;
    m(0, 0) = std::move(a);
    m(1, 1) = std::move(b);
    m(2, 2) = std::move(c);
    return m;
}

const GMat3& form_j() {
    static const GMat3 J = gmat_diag(GaussInt(1), GaussInt(1), GaussInt(-1));
    return J;
}

// Componentwise Kahan-compensated complex accumulator.
struct KahanSum {
    cplx s{0}, c{0};
    void add(cplx x) {
        cplx y = x - c;
        cplx t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

cplx ipow(int a) {
    static const cplx table[4] = {cplx(1), cplx(0, 1), cplx(-1), cplx(0, -1)};
    return table[((a % 4) + 4) % 4];
}

GaussInt gauss_i_pow(int a) {
    switch (((a % 4) + 4) % 4) {
        case 0: return GaussInt(1);
        case 1: return GaussInt(0, 1);
        case 2: return GaussInt(-1);
        default: return GaussInt(0, -1);
    }
}

} // namespace

LatticeElement::LatticeElement(GMat3 mat, std::string w)
    : m(std::move(mat)), word(std::move(w)) {
    if (!gamma0_member(m))
        throw NotInGroup("LatticeElement: matrix fails exact membership");
}

bool gamma0_member(const GMat3& m) {
    if (m.herm_conj() * form_j() * m != form_j()) return false;
    return m.det() == GaussInt(1);
}

GMat3 gamma0_inverse(const GMat3& m) {
    return form_j() * m.herm_conj() * form_j();
}

bool in_gamma_n(const GMat3& m) {
    // Shape of n(b, r): with z = i r - |b|^2 / 2 the matrix is
    //   [[1 + z, b, -z], [-conj(b), 1, conj(b)], [z, b, 1 - z]],
    // and Re(z) = -|b|^2 / 2 ties the real part of the corner to |b|^2.
    const GaussInt one(1);
    if (m(1, 1) != one) return false;
    const GaussInt& b = m(0, 1);
    if (m(2, 1) != b) return false;
    if (m(1, 0) != -b.conj()) return false;
    if (m(1, 2) != b.conj()) return false;
    GaussInt z = m(0, 0) - one;
    if (m(0, 2) != -z) return false;
    if (m(2, 0) != z) return false;
    if (m(2, 2) != one - z) return false;
    return 2 * z.re + b.norm() == 0;
}

bool fixes_cusp(const GMat3& m) {
    // v0 = (1, 0, 1)^t spans the isotropic line fixed by P = NAM.
    GaussInt v0 = m(0, 0) + m(0, 2);
    GaussInt v1 = m(1, 0) + m(1, 2);
    GaussInt v2 = m(2, 0) + m(2, 2);
    return v1.is_zero() && v0 == v2;
}

CosetKey coset_key(const GMat3& gamma) {
    GMat3 inv = gamma0_inverse(gamma);
    return {inv(0, 0) + inv(0, 2), inv(1, 0) + inv(1, 2),
            inv(2, 0) + inv(2, 2)};
}

Mat3 g_infinity() {
    return mk_a(std::sqrt(real(2))) * mk_m(std::exp(I_UNIT * (PI / 4)));
}

Mat3 conjugated_embedding(const GMat3& gamma) {
    static const Mat3 ginf = g_infinity();
    static const Mat3 ginv = inverse(ginf);
    return ginv * (gamma.to_mat3() * ginf);
}

std::vector<LatticeElement> default_generators() {
    auto gmat_n = [](GaussInt b, GaussInt z) {
        // n(b, r) with z = i r - |b|^2 / 2 landing in Z[i].
        GMat3 m;
        m(0, 0) = GaussInt(1) + z;
        m(0, 1) = b;
        m(0, 2) = -z;
        m(1, 0) = -b.conj();
        m(1, 1) = GaussInt(1);
        m(1, 2) = b.conj();
        m(2, 0) = z;
        m(2, 1) = b;
        m(2, 2) = GaussInt(1) - z;
        return m;
    };
    // ginf n(b0, r0) ginf^{-1} = n(sqrt(2) e^{3 pi i/4} b0, 2 r0): the
    // lattice generators n(1,0), n(i,0), n(0,1/2) of Lambda_4 map to
    // n(-1+i, 0), n(-1-i, 0), n(0, 1).
    std::vector<LatticeElement> gens;
    gens.emplace_back(gmat_n(GaussInt(-1, 1), GaussInt(-1)), "a");
    gens.emplace_back(gmat_n(GaussInt(-1, -1), GaussInt(-1)), "b");
    gens.emplace_back(gmat_n(GaussInt(0), GaussInt(0, 1)), "c");
    gens.emplace_back(
        LatticeElement(gmat_diag(GaussInt(0, 1), GaussInt(-1), GaussInt(0, 1)),
                       "m"));
    gens.emplace_back(
        LatticeElement(gmat_diag(GaussInt(-1), GaussInt(-1), GaussInt(1)),
                       "w"));
    // Verify the claimed conjugation identities in floating point.
    const NPoint targets[3] = {{cplx(1), 0}, {cplx(0, 1), 0}, {cplx(0), 0.5}};
    for (int i = 0; i < 3; ++i) {
        Mat3 back = conjugated_embedding(gens[i].m);
        if (max_abs_diff(back, mk_n(targets[i].b, targets[i].r)) > 1e-12)
            throw Mismatch("default_generators: conjugated generator drifted");
    }
    return gens;
}

CosetTable enumerate_cosets(const std::vector<LatticeElement>& gens, int L,
                            std::size_t cap) {
    if (L < 0) throw BadParameter("enumerate_cosets: negative length");
    for (const auto& g : gens)
        if (!gamma0_member(g.m))
            throw NotInGroup("enumerate_cosets: generator fails membership");

    // Step alphabet: generators and their inverses, with lowercase/uppercase
    // word letters ('a' -> 'A' for the inverse and so on).
    std::vector<std::pair<GMat3, char>> steps;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        char c = gens[i].word.size() == 1 ? gens[i].word[0]
                                          : static_cast<char>('a' + i);
        steps.emplace_back(gens[i].m, c);
        GMat3 inv = gamma0_inverse(gens[i].m);
        if (!(inv == gens[i].m))
            steps.emplace_back(std::move(inv),
                               static_cast<char>(std::toupper(c)));
    }

    std::map<GMat3, std::string> seen;
    seen.emplace(GMat3::identity(), "");
    std::vector<const GMat3*> frontier{&seen.begin()->first};
    for (int level = 1; level <= L; ++level) {
        std::vector<const GMat3*> next;
        for (const GMat3* g : frontier) {
            const std::string& w = seen.at(*g);
            for (const auto& [s, c] : steps) {
                GMat3 prod = *g * s;
                auto [it, fresh] = seen.emplace(std::move(prod), w + c);
                if (fresh) {
                    if (seen.size() > cap)
                        throw CapExceeded("enumerate_cosets: element cap hit");
                    next.push_back(&it->first);
                }
            }
        }
        frontier = std::move(next);
    }

    // Bucket by exact key; keep the first representative in (word length,
    // word, matrix) order and verify every other bucket member against it.
    std::map<CosetKey, std::vector<const std::pair<const GMat3, std::string>*>>
        buckets;
    for (const auto& entry : seen) buckets[coset_key(entry.first)].push_back(&entry);

    CosetTable table;
    table.length = L;
    for (auto& [key, members] : buckets) {
        std::sort(members.begin(), members.end(),
                  [](const auto* x, const auto* y) {
                      if (x->second.size() != y->second.size())
                          return x->second.size() < y->second.size();
                      if (x->second != y->second) return x->second < y->second;
                      return x->first < y->first;
                  });
        const GMat3& rep = members.front()->first;
        GMat3 rep_inv = gamma0_inverse(rep);
        for (std::size_t i = 1; i < members.size(); ++i) {
            if (!in_gamma_n(members[i]->first * rep_inv))
                throw InvariantIncomplete(
                    "enumerate_cosets: key collision outside Gamma_N");
        }
        table.representatives.emplace_back(rep, members.front()->second);
        table.keys.push_back(key);
    }
    return table;
}

namespace {

// Membership residuals of g* J g grow like the squared entry size, so the
// iwasawa tolerance must scale accordingly for long lattice words.
real iwasawa_tol(const Mat3& m) {
    real scale = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) scale = std::max(scale, std::abs(m(i, j)));
    return 1e-10 * scale * scale;
}

} // namespace

cplx eisenstein_partial(int j, cplx nu, const KIndex& idx, const Mat3& g,
                        const CosetTable& table) {
    if (!(nu.real() > 2))
        throw OutsideConvergence("eisenstein_partial: requires Re nu > 2");
    if (!kindex_valid(idx) || idx.h - 3 * idx.r != 2 * j)
        throw BadParameter("eisenstein_partial: need h - 3r = 2j");
    KahanSum acc;
    for (const auto& rep : table.representatives) {
        Mat3 gm = conjugated_embedding(rep.m) * g;
        Iwasawa iw = iwasawa(gm, iwasawa_tol(gm));
        acc.add(std::pow(cplx(iw.t), cplx(2) + nu) *
                kpoly_eval(idx, kpoint_from(iw.k)));
    }
    return acc.s;
}

cplx poincare_partial(const FourierTermOrder& order, int j, cplx nu,
                      const Mat3& g, const CosetTable& table,
                      const std::function<real(real)>& cutoff) {
    if (!(nu.real() > 2) && !cutoff)
        throw OutsideConvergence("poincare_partial: requires Re nu > 2");
    FourierTermFunction mu = mu_1d(order, j, nu);
    KahanSum acc;
    for (const auto& rep : table.representatives) {
        Mat3 gm = conjugated_embedding(rep.m) * g;
        real weight = 1;
        if (cutoff) {
            weight = cutoff(iwasawa(gm, iwasawa_tol(gm)).t);
            if (weight == 0) continue;
        }
        acc.add(mu.eval_mat(gm) * weight);
    }
    return acc.s;
}

PoincareInfty poincare_infty(const FourierTermOrder& order, int j, cplx nu,
                             const Mat3& g) {
    FourierTermFunction mu = mu_1d(order, j, nu);
    PoincareInfty out;
    Mat3 mi = mk_m(I_UNIT);
    Mat3 pw = Mat3::identity();
    KahanSum acc;
    for (int a = 0; a < 4; ++a) {
        acc.add(mu.eval_mat(pw * g));
        pw = mi * pw;
    }
    out.value = acc.s;

    // Order-N coefficient from combinatorics.  Each summand satisfies
    // Mu(m(i)^a g) = i^{a j} sum_{N'} (transport matrix) Mu_{N'}(g); only
    // diagonal returns contribute to the order-N Fourier term.
    if (const auto* ab = std::get_if<AbelianOrder>(&order)) {
        cplx coeff = 0;
        for (int a = 0; a < 4; ++a)
            if (gauss_i_pow(a) * ab->beta == ab->beta)
                coeff += ipow(a * j);
        out.a_coeff = coeff;
    } else {
        const auto& na = std::get<NonAbelianOrder>(order);
        NonAbIndices ni = nonabelian_indices(j, na);
        long dim = std::lround(2 * std::abs(na.ell));
        long c = ((na.c % dim) + dim) % dim;
        cplx coeff = 0;
        for (int a = 0; a < 4; ++a) {
            // Theta_c(n(i^{-a} b, r)) expands through the inverse action
            // matrix power U^{-a} = U^{4-a}; take its (c, c) entry.
            std::vector<cplx> v(dim, cplx(0));
            v[c] = 1;
            for (int s = 0; s < (4 - a) % 4; ++s)
                v = mi_transform(na.ell, static_cast<int>(ni.m0), v);
            coeff += ipow(a * j) * v[c];
        }
        out.a_coeff = coeff;
    }
    return out;
}

namespace {

NGrid doubled(const NGrid& g) { return {2 * g.nx, 2 * g.ny, 2 * g.nr}; }

cplx converged_pair(cplx coarse, cplx fine, const char* who) {
    if (std::abs(coarse - fine) > 1e-6 * (1 + std::abs(fine)))
        throw QuadratureUnconverged(who);
    return fine;
}

} // namespace

cplx fourier_term_abelian(const GaussInt& beta,
                          const std::function<cplx(const Mat3&)>& f,
                          const Mat3& g, int sigma, const NGrid& grid) {
    cplx bc = beta.to_cplx();
    auto integrand = [&](const NPoint& n) {
        return std::conj(character_eval(bc, n)) * f(mk_n(n.b, n.r) * g);
    };
    cplx coarse = n_average(sigma, integrand, grid);
    cplx fine = n_average(sigma, integrand, doubled(grid));
    return converged_pair(coarse, fine,
                          "fourier_term_abelian: grid doubling disagrees");
}

cplx fourier_term_pointwise_nonabelian(const NonAbelianOrder& order,
                                       const std::function<cplx(const Mat3&)>& f,
                                       const Mat3& g, int mmax, int sigma,
                                       const NGrid& grid) {
    check_order(order);
    Iwasawa iw = iwasawa(g);
    Mat3 ak = mk_a(iw.t) * iw.k;
    NPoint n0{iw.b, iw.r};
    auto value_at = [&](const NGrid& gr) {
        KahanSum acc;
        for (int m = 0; m <= mmax; ++m) {
            cplx proj = n_average(
                sigma,
                [&](const NPoint& n1) {
                    return std::conj(theta_eval_hermite(order.ell, order.c, m, n1)) *
                           f(mk_n(n1.b, n1.r) * ak);
                },
                gr);
            acc.add(theta_eval_hermite(order.ell, order.c, m, n0) * proj);
        }
        return acc.s;
    };
    return converged_pair(
        value_at(grid), value_at(doubled(grid)),
        "fourier_term_pointwise_nonabelian: grid doubling disagrees");
}

bool selection_rule(const NonAbelianOrder& order, const NAPair& pair) {
    if (pair.m < 0 || !kindex_valid(pair.idx)) return false;
    int sgn = order.ell > 0 ? 1 : -1;
    return (6 * pair.m + 3) * sgn + pair.idx.h - 3 * pair.idx.r == order.d;
}

std::vector<std::vector<cplx>> fourier_term_nonabelian(
    const NonAbelianOrder& order, const std::function<cplx(const Mat3&)>& f,
    const std::vector<Mat3>& gs, const std::vector<NAPair>& pairs, int sigma,
    const NGrid& grid, int korder) {
    check_order(order);
    for (const auto& pr : pairs)
        if (!selection_rule(order, pr))
            throw BadIndex("fourier_term_nonabelian: pair violates the rule");

    std::vector<std::vector<cplx>> out;
    for (const Mat3& g : gs) {
        real t = iwasawa(g).t;
        Mat3 at = mk_a(t);
        std::vector<cplx> row;
        for (const auto& pr : pairs) {
            real norm2 = kphi_norm2(pr.idx.h, pr.idx.p, pr.idx.q);
            auto coeff_at = [&](const NGrid& gr) {
                return k_integrate(
                           [&](const KPoint& k1) {
                               Mat3 atk = at * kpoint_mat(k1);
                               return std::conj(kpoly_eval(pr.idx, k1)) *
                                      n_average(
                                          sigma,
                                          [&](const NPoint& n1) {
                                              return std::conj(theta_eval_hermite(
                                                         order.ell, order.c,
                                                         pr.m, n1)) *
                                                     f(mk_n(n1.b, n1.r) * atk);
                                          },
                                          gr);
                           },
                           korder) /
                       norm2;
            };
            row.push_back(converged_pair(
                coeff_at(grid), coeff_at(doubled(grid)),
                "fourier_term_nonabelian: grid doubling disagrees"));
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::string coset_table_jsonl(const CosetTable& table) {
    std::ostringstream os;
    for (std::size_t i = 0; i < table.representatives.size(); ++i) {
        nlohmann::json row;
        row["word"] = table.representatives[i].word;
        nlohmann::json mat = nlohmann::json::array();
        for (const auto& z : table.representatives[i].m.a) {
            mat.push_back(z.re.convert_to<long long>());
            mat.push_back(z.im.convert_to<long long>());
        }
        row["matrix"] = std::move(mat);
        nlohmann::json key = nlohmann::json::array();
        for (const auto& z : table.keys[i]) {
            key.push_back(z.re.convert_to<long long>());
            key.push_back(z.im.convert_to<long long>());
        }
        row["key"] = std::move(key);
        os << row.dump() << "\n";
    }
    return os.str();
}

} // namespace su21
