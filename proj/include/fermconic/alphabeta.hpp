#pragma once

#include <array>
#include <memory>
#include <string>

#include "fermconic/errors.hpp"

namespace fermconic {

/// Defining data of the two tangent-cone quadratics over a base field F:
///   S30 a^2 + 2 S31 a + S32 = 0   and   S20 b^2 + 2 S11 b + S02 = 0.
/// Holds the reduction scalars a^2 = a1*a + a0, b^2 = b1*b + b0.
template <class F>
struct QuadPair {
    F s30, s31, s32, s20, s11, s02;
    F a1, a0, b1, b0;

    QuadPair(F s30_, F s31_, F s32_, F s20_, F s11_, F s02_)
        : s30(std::move(s30_)),
          s31(std::move(s31_)),
          s32(std::move(s32_)),
          s20(std::move(s20_)),
          s11(std::move(s11_)),
          s02(std::move(s02_)),
          a1(s30.zero_like()),
          a0(s30.zero_like()),
          b1(s30.zero_like()),
          b0(s30.zero_like()) {
        if (s30.is_zero() || s20.is_zero())
            throw DegenerateExtension("QuadPair: S30 = 0 or S20 = 0, no alpha/beta extension");
        F two = s30.one_like() + s30.one_like();
        a1 = -(two * s31) / s30;
        a0 = -s32 / s30;
        b1 = -(two * s11) / s20;
        b0 = -s02 / s20;
    }
};

template <class F>
using QuadPtr = std::shared_ptr<const QuadPair<F>>;

/// Element c00 + c10*alpha + c01*beta + c11*alpha*beta of the degree-4
/// extension, kept reduced by the two quadratic relations.
template <class F>
class AlphaBeta {
   public:
    AlphaBeta() = default;  // placeholder state; assign before use
    AlphaBeta(QuadPtr<F> quad, F c00, F c10, F c01, F c11)
        : quad_(std::move(quad)),
          c_{std::move(c00), std::move(c10), std::move(c01), std::move(c11)} {}

    static AlphaBeta scalar(const QuadPtr<F>& q, const F& v) {
        return AlphaBeta(q, v, v.zero_like(), v.zero_like(), v.zero_like());
    }
    static AlphaBeta alpha(const QuadPtr<F>& q) {
        F z = q->s30.zero_like();
        return AlphaBeta(q, z, q->s30.one_like(), z, z);
    }
    static AlphaBeta beta(const QuadPtr<F>& q) {
        F z = q->s30.zero_like();
        return AlphaBeta(q, z, z, q->s30.one_like(), z);
    }

    const QuadPtr<F>& quad() const { return quad_; }
    const F& c00() const { return c_[0]; }
    const F& c10() const { return c_[1]; }
    const F& c01() const { return c_[2]; }
    const F& c11() const { return c_[3]; }

    bool is_zero() const {
        return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }
    bool is_scalar() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

    AlphaBeta zero_like() const {
        F z = c_[0].zero_like();
        return AlphaBeta(quad_, z, z, z, z);
    }
    AlphaBeta one_like() const {
        F z = c_[0].zero_like();
        return AlphaBeta(quad_, c_[0].one_like(), z, z, z);
    }

    AlphaBeta& operator+=(const AlphaBeta& o) {
        check(o);
        for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
        return *this;
    }
    AlphaBeta& operator-=(const AlphaBeta& o) {
        check(o);
        for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    AlphaBeta operator-() const { return AlphaBeta(quad_, -c_[0], -c_[1], -c_[2], -c_[3]); }

    friend AlphaBeta operator+(AlphaBeta a, const AlphaBeta& b) { return a += b; }
    friend AlphaBeta operator-(AlphaBeta a, const AlphaBeta& b) { return a -= b; }

    friend AlphaBeta operator*(const AlphaBeta& x, const AlphaBeta& y) {
        x.check(y);
        const QuadPair<F>& q = *x.quad_;
        // split as (X0 + X1*alpha) with Xi in F[beta]; multiply in two stages
        auto bmul = [&q](const F& a, const F& b, const F& c, const F& d) {
            // (a + b*beta)(c + d*beta) with beta^2 = b1*beta + b0
            F bd = b * d;
            return std::array<F, 2>{a * c + bd * q.b0, a * d + b * c + bd * q.b1};
        };
        auto x0 = std::array<F, 2>{x.c_[0], x.c_[2]};
        auto x1 = std::array<F, 2>{x.c_[1], x.c_[3]};
        auto y0 = std::array<F, 2>{y.c_[0], y.c_[2]};
        auto y1 = std::array<F, 2>{y.c_[1], y.c_[3]};
        auto p00 = bmul(x0[0], x0[1], y0[0], y0[1]);
        auto p01 = bmul(x0[0], x0[1], y1[0], y1[1]);
        auto p10 = bmul(x1[0], x1[1], y0[0], y0[1]);
        auto p11 = bmul(x1[0], x1[1], y1[0], y1[1]);
        // result = p00 + (p01 + p10)*alpha + p11*alpha^2, alpha^2 = a1*alpha + a0
        F r00 = p00[0] + p11[0] * q.a0;
        F r01 = p00[1] + p11[1] * q.a0;
        F r10 = p01[0] + p10[0] + p11[0] * q.a1;
        F r11 = p01[1] + p10[1] + p11[1] * q.a1;
        return AlphaBeta(x.quad_, std::move(r00), std::move(r10), std::move(r01), std::move(r11));
    }
    AlphaBeta& operator*=(const AlphaBeta& o) {
        *this = *this * o;
        return *this;
    }

    void add_mul(const AlphaBeta& a, const AlphaBeta& b) { *this += a * b; }

    /// Conjugate swapping the alpha root (alpha -> a1 - alpha).
    AlphaBeta conj_alpha() const {
        const QuadPair<F>& q = *quad_;
        return AlphaBeta(quad_, c_[0] + c_[1] * q.a1, -c_[1], c_[2] + c_[3] * q.a1, -c_[3]);
    }
    /// Conjugate swapping the beta root.
    AlphaBeta conj_beta() const {
        const QuadPair<F>& q = *quad_;
        return AlphaBeta(quad_, c_[0] + c_[2] * q.b1, c_[1] + c_[3] * q.b1, -c_[2], -c_[3]);
    }

    /// Product over the four conjugates; lands in the base field.
    F norm() const {
        AlphaBeta n = (*this) * conj_alpha();
        n = n * n.conj_beta();
        if (!n.is_scalar()) throw Error("AlphaBeta: norm did not reduce to the base field");
        return n.c_[0];
    }

    AlphaBeta inv() const {
        // x^{-1} = (prod of the three other conjugates) / Norm(x)
        AlphaBeta ca = conj_alpha();
        AlphaBeta cb = conj_beta();
        AlphaBeta cab = ca.conj_beta();
        AlphaBeta cof = ca * cb * cab;
        AlphaBeta full = (*this) * cof;
        if (!full.is_scalar()) throw Error("AlphaBeta: norm did not reduce to the base field");
        if (full.c_[0].is_zero()) throw NotInvertible("AlphaBeta: zero norm");
        F s = full.c_[0].one_like() / full.c_[0];
        return AlphaBeta(quad_, cof.c_[0] * s, cof.c_[1] * s, cof.c_[2] * s, cof.c_[3] * s);
    }

    AlphaBeta& operator/=(const AlphaBeta& o) { return *this *= o.inv(); }
    friend AlphaBeta operator/(AlphaBeta a, const AlphaBeta& b) { return a /= b; }

    friend bool operator==(const AlphaBeta& a, const AlphaBeta& b) {
        return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2] && a.c_[3] == b.c_[3];
    }
    friend bool operator!=(const AlphaBeta& a, const AlphaBeta& b) { return !(a == b); }

    std::string to_string() const {
        return "(" + c_[0].to_string() + ") + (" + c_[1].to_string() + ")*a + (" +
               c_[2].to_string() + ")*b + (" + c_[3].to_string() + ")*ab";
    }

   private:
    void check(const AlphaBeta& o) const {
        if (quad_ == o.quad_) return;
        if (quad_ && o.quad_ && quad_->s30 == o.quad_->s30 && quad_->s31 == o.quad_->s31 &&
            quad_->s32 == o.quad_->s32 && quad_->s20 == o.quad_->s20 &&
            quad_->s11 == o.quad_->s11 && quad_->s02 == o.quad_->s02)
            return;
        throw DomainError("AlphaBeta: mixing elements of different extensions");
    }

    QuadPtr<F> quad_;
    std::array<F, 4> c_;
};

}  // namespace fermconic
