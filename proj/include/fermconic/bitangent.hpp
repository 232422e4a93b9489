#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <random>

#include "fermconic/fp_univariate.hpp"
#include "fermconic/linalg.hpp"
#include "fermconic/prime_field.hpp"
#include "fermconic/symfun.hpp"

namespace fermconic::bitangent {

/// Point of P^4 over a coefficient domain C (a field or a polynomial ring).
template <class C>
struct PointP4 {
    std::array<C, 5> x;

    bool all_zero() const {
        for (const auto& c : x)
            if (!c.is_zero()) return false;
        return true;
    }
};

/// Projective equality by vanishing of all 2x2 minors; avoids chart choices.
template <class C>
bool projectively_equal(const PointP4<C>& a, const PointP4<C>& b) {
    if (a.all_zero() || b.all_zero()) throw DomainError("projectively_equal: zero vector");
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            C minor = a.x[i] * b.x[j] - a.x[j] * b.x[i];
            if (!minor.is_zero()) return false;
        }
    return true;
}

/// The four bitangency sums  sum_i q_i^k p_i^(5-k)  for k in {0, 1, 4, 5};
/// all zero exactly when (PQ, P, Q) is a marked bitangent of the quintic.
template <class C>
std::array<C, 4> contact_residuals(const PointP4<C>& p, const PointP4<C>& q) {
    std::array<unsigned, 4> ks{0, 1, 4, 5};
    std::array<C, 4> out{p.x[0].zero_like(), p.x[0].zero_like(), p.x[0].zero_like(),
                         p.x[0].zero_like()};
    for (int t = 0; t < 4; ++t) {
        unsigned k = ks[t];
        C acc = p.x[0].zero_like();
        for (int i = 0; i < 5; ++i) {
            C term = p.x[0].one_like();
            for (unsigned a = 0; a < k; ++a) term *= q.x[i];
            for (unsigned a = 0; a < 5 - k; ++a) term *= p.x[i];
            acc += term;
        }
        out[t] = acc;
    }
    return out;
}

template <class C>
C coeff_to(const Rational& r, const C& proto);

template <>
inline Fp coeff_to<Fp>(const Rational& r, const Fp& proto) {
    return Fp(r.mod(proto.modulus()), proto.modulus());
}
template <>
inline Rational coeff_to<Rational>(const Rational& r, const Rational&) {
    return r;
}

/// Evaluates a Q[u0..u4] polynomial at field points (coefficients mapped in).
template <class C>
C eval_rational_poly(const MultiPoly<Rational>& f, const std::array<C, 5>& u) {
    C acc = u[0].zero_like();
    std::array<std::vector<C>, 5> cache;
    for (const auto& t : f.terms()) {
        C v = coeff_to<C>(t.c, u[0]);
        for (size_t i = 0; i < 5; ++i) {
            unsigned e = t.m.exp(i);
            if (!e) continue;
            auto& cc = cache[i];
            if (cc.empty()) {
                cc.push_back(u[0].one_like());
                cc.push_back(u[i]);
            }
            while (cc.size() <= e) cc.push_back(cc.back() * u[i]);
            v *= cc[e];
        }
        acc += v;
    }
    return acc;
}

/// m(U) = [M_0(U) : ... : M_4(U)] for a specialized U over a field.
template <class C>
PointP4<C> m_map(const std::array<C, 5>& u) {
    const symfun::URing& R = symfun::uring();
    PointP4<C> out{u[0].zero_like(), u[0].zero_like(), u[0].zero_like(), u[0].zero_like(),
                   u[0].zero_like()};
    for (int i = 0; i < 5; ++i) out.x[i] = eval_rational_poly(R.M(i), u);
    if (out.all_zero()) throw BaseLocusError("m_map: all M_i vanish, U in the base locus");
    return out;
}

/// Base-locus membership for a specialized U over a field, in the component
/// order: 25 planes, 10 quartic surfaces, the sextic V(e2, e3).
struct BaseLocusClass {
    enum Kind { kPlanePair, kQuarticSurface, kSexticComponent, kNotInBaseLocus };
    Kind kind = kNotInBaseLocus;
    std::array<int, 4> plane{-1, -1, -1, -1};    // (i,j),(k,l) of V(u_i-u_j, u_k-u_l)
    std::array<int, 2> quartic{-1, -1};          // (i,j) of V(u_i-u_j, n_i)

    std::string to_string() const {
        switch (kind) {
            case kPlanePair:
                return "PlanePair(" + std::to_string(plane[0]) + "," + std::to_string(plane[1]) +
                       "," + std::to_string(plane[2]) + "," + std::to_string(plane[3]) + ")";
            case kQuarticSurface:
                return "QuarticSurface(" + std::to_string(quartic[0]) + "," +
                       std::to_string(quartic[1]) + ")";
            case kSexticComponent:
                return "SexticComponent";
            default:
                return "NotInBaseLocus";
        }
    }
};

template <class C>
BaseLocusClass base_locus_classify(const std::array<C, 5>& u) {
    const symfun::URing& R = symfun::uring();
    std::vector<std::pair<int, int>> equal_pairs;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if ((u[i] - u[j]).is_zero()) equal_pairs.emplace_back(i, j);
    BaseLocusClass out;
    if (equal_pairs.size() >= 2) {
        out.kind = BaseLocusClass::kPlanePair;
        out.plane = {equal_pairs[0].first, equal_pairs[0].second, equal_pairs[1].first,
                     equal_pairs[1].second};
        return out;
    }
    if (equal_pairs.size() == 1) {
        int i = equal_pairs[0].first, j = equal_pairs[0].second;
        if (eval_rational_poly(R.n(i), u).is_zero()) {
            out.kind = BaseLocusClass::kQuarticSurface;
            out.quartic = {i, j};
            return out;
        }
        return out;  // single coincidence off the quartic: not in the base locus
    }
    if (eval_rational_poly(R.e(2), u).is_zero() && eval_rational_poly(R.e(3), u).is_zero()) {
        out.kind = BaseLocusClass::kSexticComponent;
        return out;
    }
    return out;
}

/// Tag [k] in Z_4^4 with q_i ~ p_i * i^(k_i) (k_0 normalized to 0), when the
/// two tangent hyperplanes coincide; exhaustive search over the 256 tags.
struct ExceptionalTag {
    bool found = false;
    std::array<int, 4> k{0, 0, 0, 0};

    std::array<int, 5> full() const { return {0, k[0], k[1], k[2], k[3]}; }
};

template <class C>
ExceptionalTag exceptional_tag(const PointP4<C>& p, const PointP4<C>& q, const C& imag_unit) {
    std::array<C, 4> ipow{p.x[0].one_like(), imag_unit, imag_unit * imag_unit,
                          imag_unit * imag_unit * imag_unit};
    ExceptionalTag tag;
    for (int k1 = 0; k1 < 4; ++k1)
        for (int k2 = 0; k2 < 4; ++k2)
            for (int k3 = 0; k3 < 4; ++k3)
                for (int k4 = 0; k4 < 4; ++k4) {
                    PointP4<C> cand{p.x[0], p.x[1] * ipow[k1], p.x[2] * ipow[k2],
                                    p.x[3] * ipow[k3], p.x[4] * ipow[k4]};
                    if (projectively_equal(cand, q)) {
                        tag.found = true;
                        tag.k = {k1, k2, k3, k4};
                        return tag;
                    }
                }
    return tag;
}

/// Kernel of the root-evaluation system: for every root value r among the
/// supplied matrix, sum_i c_i^5 prod_j (r - r_ij)^5 = 0. Returns the kernel
/// basis; a re-substitution certificate accompanies a unique solution.
template <class C>
struct DworkResult {
    enum Kind { kUnique, kEmptyKernel, kFatKernel };
    Kind kind = kEmptyKernel;
    std::vector<std::array<C, 5>> kernel;  // basis vectors (c_i^5)
    bool certificate = false;
};

/// Planted instance for the root-evaluation system: coordinates A + zeta^i B
/// with zeta a primitive fifth root of unity satisfy
///   sum_i (A + zeta^i B)^5 = 5 (A^5 + B^5) = 5 prod_i (A + zeta^i B),
/// i.e. an actual degree-(d+1) rational curve on a member of the pencil, so
/// the all-ones vector lies in the kernel. A random Moebius reparametrization
/// then scatters the planted c_i^5 while keeping the kernel membership.
struct PlantedDwork {
    std::vector<std::vector<Fp>> roots;  // 5 x (d+1)
    std::array<Fp, 5> planted;           // the c_i^5 the solver must recover
};

inline std::optional<PlantedDwork> plant_dwork_roots(unsigned d, std::uint64_t p,
                                                     std::mt19937_64& rng) {
    using fpuni::Poly;
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    Fp zeta = fpuni::root_of_unity(5, p, rng);
    unsigned deg = d + 1;
    auto rand_poly = [&](unsigned degree, bool monic) {
        Poly out(degree + 1, Fp(0, p));
        for (unsigned i = 0; i <= degree; ++i) out[i] = Fp(dist(rng), p);
        if (monic) out[degree] = Fp(1, p);
        return out;
    };
    for (int attempt = 0; attempt < 200000; ++attempt) {
        Poly A = rand_poly(deg, true);
        Poly B = rand_poly(deg - 1, false);
        std::vector<std::vector<Fp>> roots(5);
        bool ok = true;
        std::vector<std::uint64_t> seen;
        for (int i = 0; i < 5 && ok; ++i) {
            Poly Ci = A;
            Fp zi = zeta.pow(i);
            for (size_t k = 0; k < B.size(); ++k) Ci[k] += zi * B[k];
            if (!fpuni::splits_distinct(Ci)) {
                ok = false;
                break;
            }
            auto rs = fpuni::roots(Ci, rng);
            if (rs.size() != deg) {
                ok = false;
                break;
            }
            for (const auto& r : rs) seen.push_back(r.value());
            roots[i] = rs;
        }
        if (!ok) continue;
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) continue;
        // Moebius twist t -> (alpha t + beta) / (gamma t + delta)
        Fp ma(dist(rng), p), mb(dist(rng), p), mc(dist(rng), p), md(dist(rng), p);
        if ((ma * md - mb * mc).is_zero()) continue;
        bool pole = false;
        for (const auto& row : roots)
            for (const auto& r : row)
                if ((md + mc * r).is_zero()) pole = true;
        if (pole) continue;
        PlantedDwork out;
        out.roots.assign(5, {});
        for (int i = 0; i < 5; ++i) {
            Fp scale(1, p);
            for (const auto& r : roots[i]) {
                out.roots[i].push_back((ma * r + mb) / (mc * r + md));
                scale *= (md + mc * r);
            }
            Fp s5 = scale * scale;
            s5 *= s5;
            s5 *= scale;
            out.planted[i] = s5;
        }
        // distinctness after the twist
        std::vector<std::uint64_t> seen2;
        for (const auto& row : out.roots)
            for (const auto& r : row) seen2.push_back(r.value());
        std::sort(seen2.begin(), seen2.end());
        if (std::adjacent_find(seen2.begin(), seen2.end()) != seen2.end()) continue;
        return out;
    }
    return std::nullopt;
}

template <class C>
DworkResult<C> dwork_cover_solve(const std::vector<std::vector<C>>& roots) {
    if (roots.size() != 5) throw DomainError("dwork_cover_solve: need 5 coordinate root rows");
    size_t cols = roots[0].size();
    for (const auto& row : roots)
        if (row.size() != cols) throw DomainError("dwork_cover_solve: ragged root matrix");
    C zero = roots[0][0].zero_like();
    C one = roots[0][0].one_like();
    Matrix<C> m;
    for (const auto& row : roots)
        for (const C& r : row) {
            std::vector<C> eq;
            eq.reserve(5);
            for (int i = 0; i < 5; ++i) {
                C prod = one;
                for (const C& rij : roots[i]) {
                    C diff = r - rij;
                    C fifth = diff * diff;
                    fifth *= fifth;
                    fifth *= diff;
                    prod *= fifth;
                }
                eq.push_back(prod);
            }
            m.push_back(std::move(eq));
        }
    Matrix<C> saved = m;
    auto basis = nullspace(std::move(m), one);
    DworkResult<C> out;
    if (basis.empty()) {
        out.kind = DworkResult<C>::kEmptyKernel;
        return out;
    }
    for (auto& v : basis) {
        std::array<C, 5> a{zero, zero, zero, zero, zero};
        for (int i = 0; i < 5; ++i) a[i] = v[i];
        out.kernel.push_back(a);
    }
    if (basis.size() > 1) {
        out.kind = DworkResult<C>::kFatKernel;
        return out;
    }
    out.kind = DworkResult<C>::kUnique;
    out.certificate = true;
    for (const auto& row : saved) {
        C acc = zero;
        for (int i = 0; i < 5; ++i) acc += row[i] * out.kernel[0][i];
        if (!acc.is_zero()) out.certificate = false;
    }
    return out;
}

}  // namespace fermconic::bitangent
