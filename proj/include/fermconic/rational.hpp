#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "fermconic/errors.hpp"

namespace fermconic {

/// Arbitrary-precision rational, kept canonical: gcd(|num|, den) = 1,
/// den > 0, zero is 0/1. Thin wrapper over GMP's mpq_t with move support
/// and a fused add-multiply fast path for integer-valued workloads.
class Rational {
   public:
    Rational() { mpq_init(q_); }
    Rational(const Rational& o) { mpq_init(q_); mpq_set(q_, o.q_); }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational(long n) {  // NOLINT: implicit by design, mirrors integer literals
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }
    Rational(long n, long d) {
        if (d == 0) throw DomainError("Rational: zero denominator");
        mpq_init(q_);
        mpq_set_si(q_, n, d);
        mpq_canonicalize(q_);
    }
    ~Rational() { mpq_clear(q_); }

    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }

    /// Parses "num", "num/den" or a decimal integer string.
    static Rational from_string(const std::string& s) {
        Rational r;
        if (mpq_set_str(r.q_, s.c_str(), 10) != 0)
            throw ParseError("Rational: cannot parse '" + s + "'");
        if (mpz_sgn(mpq_denref(r.q_)) == 0)
            throw DomainError("Rational: zero denominator in '" + s + "'");
        mpq_canonicalize(r.q_);
        return r;
    }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    Rational zero_like() const { return Rational(); }
    Rational one_like() const { return Rational(1); }

    Rational& operator+=(const Rational& o) { mpq_add(q_, q_, o.q_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(q_, q_, o.q_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(q_, q_, o.q_); return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw NotInvertible("Rational: division by zero");
        mpq_div(q_, q_, o.q_);
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const {
        Rational r(*this);
        mpq_neg(r.q_, r.q_);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }

    /// *this += a*b. When everything in sight is an integer this runs as a
    /// single mpz_addmul, which is what the big polynomial convolutions hit.
    void add_mul(const Rational& a, const Rational& b) {
        if (is_integer() && a.is_integer() && b.is_integer()) {
            mpz_addmul(mpq_numref(q_), mpq_numref(a.q_), mpq_numref(b.q_));
        } else {
            Rational t;
            mpq_mul(t.q_, a.q_, b.q_);
            mpq_add(q_, q_, t.q_);
        }
    }

    Rational inv() const {
        if (is_zero()) throw NotInvertible("Rational: inverse of zero");
        Rational r;
        mpq_inv(r.q_, q_);
        return r;
    }

    Rational pow(unsigned long k) const {
        Rational r(1), base(*this);
        while (k) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    /// "num" for integers, "num/den" otherwise.
    std::string to_string() const {
        char* s = mpq_get_str(nullptr, 10, q_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    double to_double() const { return mpq_get_d(q_); }

    /// Reduction mod p for prime-field specialization; denominator inverted mod p.
    std::uint64_t mod(std::uint64_t p) const;

    size_t hash() const {
        return mpz_get_ui(mpq_numref(q_)) * 0x9e3779b97f4a7c15ULL ^ mpz_get_ui(mpq_denref(q_));
    }

    const mpq_t& raw() const { return q_; }

   private:
    mpq_t q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace fermconic

#include <ostream>

namespace fermconic {
inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }
}  // namespace fermconic
