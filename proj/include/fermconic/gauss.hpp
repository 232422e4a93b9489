#pragma once

#include <string>

#include "fermconic/rational.hpp"

namespace fermconic {

/// Element of Q(i), i^2 = -1.
class GaussRational {
   public:
    GaussRational() = default;
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussRational(long n) : re_(n), im_(0) {}  // NOLINT

    static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    GaussRational zero_like() const { return GaussRational(); }
    GaussRational one_like() const { return GaussRational(1); }

    GaussRational& operator+=(const GaussRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i2 = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i2);
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o) { return *this *= o.inv(); }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    GaussRational operator-() const { return GaussRational(-re_, -im_); }

    void add_mul(const GaussRational& a, const GaussRational& b) {
        re_.add_mul(a.re_, b.re_);
        Rational t = a.im_ * b.im_;
        re_ -= t;
        im_.add_mul(a.re_, b.im_);
        im_.add_mul(a.im_, b.re_);
    }

    GaussRational inv() const {
        Rational n = re_ * re_ + im_ * im_;
        if (n.is_zero()) throw NotInvertible("GaussRational: inverse of zero");
        return GaussRational(re_ / n, -(im_ / n));
    }

    GaussRational conj() const { return GaussRational(re_, -im_); }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    std::string to_string() const {
        if (im_.is_zero()) return re_.to_string();
        return re_.to_string() + "+" + im_.to_string() + "i";
    }

   private:
    Rational re_, im_;
};

}  // namespace fermconic
