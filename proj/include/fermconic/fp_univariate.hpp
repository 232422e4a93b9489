#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "fermconic/prime_field.hpp"

namespace fermconic::fpuni {

// Dense univariate polynomials over F_p, coefficient vector by ascending
// degree, used for root extraction and split tests in the oracle layer.
using Poly = std::vector<Fp>;

inline void trim(Poly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

inline int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, a[0].zero_like());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j].add_mul(a[i], b[j]);
    trim(r);
    return r;
}

inline Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), b[0].zero_like());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Remainder of a by monic-normalizable b.
inline Poly rem(Poly a, const Poly& b) {
    trim(a);
    Fp lc = b.back();
    Fp lc_inv = lc.inv();
    while (static_cast<int>(a.size()) >= static_cast<int>(b.size()) && !a.empty()) {
        Fp q = a.back() * lc_inv;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        trim(a);
    }
    return a;
}

inline Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Fp inv = a.back().inv();
        for (auto& c : a) c *= inv;
    }
    return a;
}

// x^e mod f, by square and multiply on exponent bits.
inline Poly xpow_mod(std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly result{Fp(1, p)};
    Poly base{Fp(0, p), Fp(1, p)};
    base = rem(base, f);
    while (e) {
        if (e & 1) result = rem(mul(result, base), f);
        base = rem(mul(base, base), f);
        e >>= 1;
    }
    return result;
}

/// All roots of f in F_p (with multiplicity collapsed), sorted ascending.
/// Cantor-Zassenhaus equal-degree splitting on the linear-factor part.
inline std::vector<Fp> roots(const Poly& f_in, std::mt19937_64& rng) {
    Poly f = f_in;
    trim(f);
    std::vector<Fp> out;
    if (f.empty() || deg(f) == 0) return out;
    std::uint64_t p = f.back().modulus();
    // keep only the part splitting into distinct linear factors: gcd(f, x^p - x)
    Poly xp = xpow_mod(p, f, p);
    if (xp.size() < 2) xp.resize(2, Fp(0, p));
    xp[1] -= Fp(1, p);
    Poly g = gcd(f, xp);
    std::vector<Poly> stack{g};
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    while (!stack.empty()) {
        Poly h = stack.back();
        stack.pop_back();
        trim(h);
        if (deg(h) <= 0) continue;
        if (deg(h) == 1) {
            out.push_back(-(h[0] / h[1]));
            continue;
        }
        if (p == 2) {  // tiny field: direct scan
            for (std::uint64_t x = 0; x < 2; ++x) {
                Fp acc(0, p), xe(1, p), xv(x, p);
                for (auto& c : h) { acc += c * xe; xe *= xv; }
                if (acc.is_zero()) out.push_back(xv);
            }
            continue;
        }
        // random shift split: gcd(h, (x+a)^((p-1)/2) - 1)
        bool split = false;
        for (int attempt = 0; attempt < 64 && !split; ++attempt) {
            Fp a(dist(rng), p);
            Poly shifted{a, Fp(1, p)};
            Poly pw{Fp(1, p)};
            std::uint64_t e = (p - 1) / 2;
            Poly base = rem(shifted, h);
            while (e) {
                if (e & 1) pw = rem(mul(pw, base), h);
                base = rem(mul(base, base), h);
                e >>= 1;
            }
            if (pw.empty()) pw = {Fp(0, p)};
            pw[0] -= Fp(1, p);
            Poly d = gcd(h, pw);
            if (deg(d) > 0 && deg(d) < deg(h)) {
                Poly q = h;
                // q = h / d exactly
                Poly quotient;
                {
                    Poly num = h;
                    Fp lc_inv = d.back().inv();
                    quotient.assign(h.size() - d.size() + 1, Fp(0, p));
                    while (static_cast<int>(num.size()) >= static_cast<int>(d.size()) && !num.empty()) {
                        Fp qc = num.back() * lc_inv;
                        size_t shift = num.size() - d.size();
                        quotient[shift] = qc;
                        for (size_t i = 0; i < d.size(); ++i) num[shift + i] -= qc * d[i];
                        trim(num);
                    }
                }
                stack.push_back(d);
                stack.push_back(quotient);
                split = true;
            }
        }
        if (!split) {
            // overwhelmingly unlikely; fall back to scan for small p
            if (p <= 1u << 20) {
                for (std::uint64_t x = 0; x < p; ++x) {
                    Fp acc(0, p), xe(1, p), xv(x, p);
                    for (auto& c : h) { acc += c * xe; xe *= xv; }
                    if (acc.is_zero()) out.push_back(xv);
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Fp& a, const Fp& b) { return a.value() < b.value(); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Smallest k-th root of a in F_p, if any.
inline std::optional<Fp> kth_root(const Fp& a, std::uint64_t k, std::mt19937_64& rng) {
    if (a.is_zero()) return a.zero_like();
    std::uint64_t p = a.modulus();
    Poly f(k + 1, Fp(0, p));
    f[0] = -a;
    f[k] = Fp(1, p);
    auto rs = roots(f, rng);
    if (rs.empty()) return std::nullopt;
    return rs.front();
}

/// True when f splits into deg(f) distinct linear factors over F_p.
inline bool splits_distinct(const Poly& f_in) {
    Poly f = f_in;
    trim(f);
    if (deg(f) <= 0) return false;
    std::uint64_t p = f.back().modulus();
    Poly xp = xpow_mod(p, f, p);
    if (xp.size() < 2) xp.resize(2, Fp(0, p));
    xp[1] -= Fp(1, p);
    // f | x^p - x  <=>  all roots in F_p, no repeats
    Poly g = gcd(f, xp);
    return deg(g) == deg(f);
}

/// A primitive root of unity of order n (requires n | p-1).
inline Fp root_of_unity(std::uint64_t n, std::uint64_t p, std::mt19937_64& rng) {
    if ((p - 1) % n != 0) throw DomainError("root_of_unity: order does not divide p-1");
    std::uniform_int_distribution<std::uint64_t> dist(2, p - 1);
    for (int attempt = 0; attempt < 4096; ++attempt) {
        Fp z(dist(rng), p);
        Fp w = z.pow((p - 1) / n);
        if (w.is_one()) continue;
        // exact order n: w^(n/q) != 1 for every prime q | n
        bool exact = true;
        std::uint64_t m = n;
        for (std::uint64_t q = 2; q * q <= m; ++q) {
            if (m % q == 0) {
                if (w.pow(n / q).is_one()) { exact = false; break; }
                while (m % q == 0) m /= q;
            }
        }
        if (exact && m > 1 && w.pow(n / m).is_one()) exact = false;
        if (exact) return w;
    }
    throw Error("root_of_unity: search failed");
}

}  // namespace fermconic::fpuni
