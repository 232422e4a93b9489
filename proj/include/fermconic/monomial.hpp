#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "fermconic/errors.hpp"

namespace fermconic {

/// Ordered variable list shared by all polynomials of one ring.
/// Compared by content; pointer equality is the fast path.
class Vars {
   public:
    explicit Vars(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.size() > kMaxVars)
            throw DomainError("Vars: at most 16 variables supported");
    }
    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& v) const {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == v) return static_cast<int>(i);
        return -1;
    }
    bool operator==(const Vars& o) const { return names_ == o.names_; }

    static constexpr size_t kMaxVars = 16;

   private:
    std::vector<std::string> names_;
};

using VarsPtr = std::shared_ptr<const Vars>;

inline VarsPtr make_vars(std::vector<std::string> names) {
    return std::make_shared<const Vars>(std::move(names));
}

inline bool same_vars(const VarsPtr& a, const VarsPtr& b) {
    return a == b || (a && b && *a == *b);
}

/// Exponent vector, up to 16 variables, each exponent < 256.
/// Stored as two 64-bit words so products are two integer additions
/// (guarded against per-byte overflow by the callers' degree checks).
struct Monomial {
    std::array<std::uint8_t, 16> e{};

    static Monomial unit() { return Monomial{}; }

    static Monomial var(size_t i, std::uint8_t k = 1) {
        Monomial m;
        m.e[i] = k;
        return m;
    }

    unsigned exp(size_t i) const { return e[i]; }

    void set(size_t i, unsigned k) {
        if (k > 255) throw DomainError("Monomial: exponent over 255");
        e[i] = static_cast<std::uint8_t>(k);
    }

    unsigned degree() const {
        unsigned d = 0;
        for (auto x : e) d += x;
        return d;
    }

    bool is_unit() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }

    Monomial times(const Monomial& o) const {
        Monomial r;
        for (size_t i = 0; i < 16; ++i) {
            unsigned s = unsigned(e[i]) + unsigned(o.e[i]);
            if (s > 255) throw DomainError("Monomial: exponent overflow in product");
            r.e[i] = static_cast<std::uint8_t>(s);
        }
        return r;
    }

    // Unchecked product for inner loops; callers pre-verify max degrees.
    Monomial times_unchecked(const Monomial& o) const {
        Monomial r;
        std::uint64_t a0, a1, b0, b1;
        std::memcpy(&a0, e.data(), 8);
        std::memcpy(&a1, e.data() + 8, 8);
        std::memcpy(&b0, o.e.data(), 8);
        std::memcpy(&b1, o.e.data() + 8, 8);
        a0 += b0;
        a1 += b1;
        std::memcpy(r.e.data(), &a0, 8);
        std::memcpy(r.e.data() + 8, &a1, 8);
        return r;
    }

    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < 16; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    Monomial divide(const Monomial& o) const {
        Monomial r;
        for (size_t i = 0; i < 16; ++i) {
            if (o.e[i] > e[i]) throw DomainError("Monomial: non-divisible quotient");
            r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
        }
        return r;
    }

    Monomial gcd(const Monomial& o) const {
        Monomial r;
        for (size_t i = 0; i < 16; ++i) r.e[i] = std::min(e[i], o.e[i]);
        return r;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }

    std::uint64_t word0() const {
        std::uint64_t w;
        std::memcpy(&w, e.data(), 8);
        return w;
    }
    std::uint64_t word1() const {
        std::uint64_t w;
        std::memcpy(&w, e.data() + 8, 8);
        return w;
    }

    size_t hash() const {
        std::uint64_t h = word0() * 0x9e3779b97f4a7c15ULL;
        h ^= (h >> 31);
        h += word1() * 0xbf58476d1ce4e5b9ULL;
        h ^= (h >> 29);
        return static_cast<size_t>(h);
    }
};

/// Graded reverse lexicographic order on the declared variable order.
/// a > b iff deg a > deg b, or degrees tie and the last variable where
/// they differ has a smaller exponent in a.
inline int grevlex_cmp(const Monomial& a, const Monomial& b, size_t nvars) {
    unsigned da = 0, db = 0;
    for (size_t i = 0; i < nvars; ++i) {
        da += a.e[i];
        db += b.e[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = nvars; i-- > 0;) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}

struct GrevlexGreater {
    size_t nvars;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_cmp(a, b, nvars) > 0;
    }
};

}  // namespace fermconic
