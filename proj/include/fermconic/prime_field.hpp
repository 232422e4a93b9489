#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "fermconic/errors.hpp"
#include "fermconic/rational.hpp"

namespace fermconic {

/// Element of F_p for a prime p < 2^62, value reduced to [0, p).
/// The modulus travels with the element; mixing moduli throws DomainError.
class Fp {
   public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

    static Fp from_int(long long n, std::uint64_t p) {
        long long r = n % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp zero_like() const { return Fp(0, p_); }
    Fp one_like() const { return Fp(1, p_); }

    Fp& operator+=(const Fp& o) {
        check(o);
        v_ += o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        check(o);
        v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + p_ - o.v_;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        check(o);
        v_ = static_cast<std::uint64_t>((static_cast<__uint128_t>(v_) * o.v_) % p_);
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }

    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
    friend bool operator<(const Fp& a, const Fp& b) { return a.v_ < b.v_; }

    void add_mul(const Fp& a, const Fp& b) {
        if (p_ == 0) { v_ = 0; p_ = a.p_; }
        v_ = static_cast<std::uint64_t>(
            (static_cast<__uint128_t>(a.v_) * b.v_ + v_) % p_);
    }

    Fp pow(std::uint64_t e) const {
        Fp r(1, p_), base(*this);
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    Fp inv() const {
        if (v_ == 0) throw NotInvertible("Fp: inverse of zero mod " + std::to_string(p_));
        return pow(p_ - 2);
    }

    bool is_square() const { return v_ == 0 || pow((p_ - 1) / 2).value() == 1; }

    /// Tonelli-Shanks square root; nullopt for quadratic non-residues.
    std::optional<Fp> sqrt() const {
        if (v_ == 0) return Fp(0, p_);
        if (p_ == 2) return *this;
        if (!is_square()) return std::nullopt;
        if (p_ % 4 == 3) return pow((p_ + 1) / 4);
        std::uint64_t q = p_ - 1, s = 0;
        while ((q & 1) == 0) { q >>= 1; ++s; }
        Fp z(2, p_);
        while (z.is_square()) z = Fp(z.value() + 1, p_);
        std::uint64_t m = s;
        Fp c = z.pow(q);
        Fp t = pow(q);
        Fp r = pow((q + 1) / 2);
        while (t.value() != 1) {
            std::uint64_t i = 0;
            Fp t2 = t;
            while (t2.value() != 1) { t2 *= t2; ++i; }
            Fp b = c;
            for (std::uint64_t j = 0; j + i + 1 < m; ++j) b *= b;
            m = i;
            c = b * b;
            t *= c;
            r *= b;
        }
        return r;
    }

    std::string to_string() const { return std::to_string(v_); }

    size_t hash() const { return v_ * 0x9e3779b97f4a7c15ULL ^ p_; }

   private:
    void check(const Fp& o) const {
        if (p_ != o.p_)
            throw DomainError("Fp: mixed moduli " + std::to_string(p_) + " vs " + std::to_string(o.p_));
    }
    std::uint64_t v_;
    std::uint64_t p_;
};

inline std::uint64_t Rational::mod(std::uint64_t p) const {
    mpz_t t;
    mpz_init(t);
    mpz_mod_ui(t, mpq_numref(q_), p);
    std::uint64_t num = mpz_get_ui(t);
    mpz_mod_ui(t, mpq_denref(q_), p);
    std::uint64_t den = mpz_get_ui(t);
    mpz_clear(t);
    if (den == 0) throw NotInvertible("Rational::mod: denominator divisible by p");
    return (Fp(num, p) / Fp(den, p)).value();
}

inline std::ostream& operator<<(std::ostream& os, const Fp& x);

}  // namespace fermconic

#include <ostream>

namespace fermconic {
inline std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value(); }
}  // namespace fermconic
