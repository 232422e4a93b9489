#pragma once

#include <string>
#include <utility>

#include "fermconic/gcd.hpp"
#include "fermconic/multipoly.hpp"

namespace fermconic {

/// Rational function num/den over a polynomial ring with field coefficients.
/// Kept reduced (gcd cancelled) with a monic denominator, so equal values
/// have equal representations; equality still falls back to cross products.
template <class C>
class Frac {
   public:
    using Poly = MultiPoly<C>;

    Frac() = default;

    explicit Frac(Poly num)
        : num_(std::move(num)), den_(Poly::constant(num_.vars(), num_.proto().one_like())) {}

    Frac(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw NotInvertible("Frac: zero denominator");
        reduce();
    }

    static Frac zero(const VarsPtr& vars, const C& proto) {
        return Frac(Poly(vars, proto.zero_like()));
    }
    static Frac one(const VarsPtr& vars, const C& proto) {
        return Frac(Poly::constant(vars, proto.one_like()));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const VarsPtr& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_constant() && num_ == den_; }
    bool is_polynomial() const { return den_.is_constant(); }

    Frac zero_like() const { return zero(num_.vars(), num_.proto()); }
    Frac one_like() const { return one(num_.vars(), num_.proto()); }

    Frac& operator+=(const Frac& o) {
        if (den_ == o.den_) {
            num_ += o.num_;
        } else {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ = den_ * o.den_;
        }
        reduce();
        return *this;
    }
    Frac& operator-=(const Frac& o) {
        if (den_ == o.den_) {
            num_ -= o.num_;
        } else {
            num_ = num_ * o.den_ - o.num_ * den_;
            den_ = den_ * o.den_;
        }
        reduce();
        return *this;
    }
    Frac& operator*=(const Frac& o) {
        num_ = num_ * o.num_;
        den_ = den_ * o.den_;
        reduce();
        return *this;
    }
    Frac& operator/=(const Frac& o) {
        if (o.is_zero()) throw NotInvertible("Frac: division by zero");
        num_ = num_ * o.den_;
        den_ = den_ * o.num_;
        reduce();
        return *this;
    }

    friend Frac operator+(Frac a, const Frac& b) { return a += b; }
    friend Frac operator-(Frac a, const Frac& b) { return a -= b; }
    friend Frac operator*(Frac a, const Frac& b) { return a *= b; }
    friend Frac operator/(Frac a, const Frac& b) { return a /= b; }
    Frac operator-() const {
        Frac r(*this);
        r.num_ = -r.num_;
        return r;
    }

    void add_mul(const Frac& a, const Frac& b) { *this += a * b; }

    Frac inv() const {
        if (is_zero()) throw NotInvertible("Frac: inverse of zero");
        return Frac(den_, num_);
    }

    friend bool operator==(const Frac& a, const Frac& b) {
        if (a.num_ == b.num_ && a.den_ == b.den_) return true;
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

    std::string to_string() const {
        if (is_polynomial()) return num_.to_string();
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

   private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly::constant(den_.vars(), den_.proto().one_like());
            return;
        }
        if (!den_.is_constant()) {
            Monomial mn = num_.monomial_content();
            Monomial md = den_.monomial_content();
            Monomial c = mn.gcd(md);
            if (!c.is_unit()) {
                num_ = num_.divide_monomial(c);
                den_ = den_.divide_monomial(c);
            }
        }
        if (!den_.is_constant() && !num_.is_constant()) {
            MultiPoly<C> g = poly_gcd(num_, den_);
            if (!g.is_constant() || !g.monomial_content().is_unit()) {
                num_ = num_.divide_exact(g);
                den_ = den_.divide_exact(g);
            }
        }
        C lc = den_.leading_term().c;
        if (!lc.is_one()) {
            C s = lc.one_like() / lc;
            num_.scale(s);
            den_.scale(s);
        }
    }

    Poly num_;
    Poly den_;
};

}  // namespace fermconic
