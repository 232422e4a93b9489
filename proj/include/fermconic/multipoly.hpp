#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fermconic/errors.hpp"
#include "fermconic/monomial.hpp"

namespace fermconic {

namespace detail {

/// Open-addressing monomial -> coefficient accumulator for products.
/// Values live in a side vector so probing never copies coefficients.
template <class C>
class MonoAccum {
   public:
    explicit MonoAccum(size_t expected) {
        size_t cap = 16;
        while (cap < expected * 2) cap <<= 1;
        slots_.assign(cap, kEmpty);
        keys_.resize(cap);
        mask_ = cap - 1;
    }

    // Returns the value slot for m, creating it with `zero` if absent.
    C& at(const Monomial& m, const C& zero) {
        if (vals_.size() * 2 >= slots_.size()) grow();
        size_t i = m.hash() & mask_;
        while (true) {
            std::uint32_t s = slots_[i];
            if (s == kEmpty) {
                slots_[i] = static_cast<std::uint32_t>(vals_.size());
                keys_[i] = m;
                vals_.push_back(zero);
                order_.push_back(i);
                return vals_.back();
            }
            if (keys_[i] == m) return vals_[s];
            i = (i + 1) & mask_;
        }
    }

    template <class F>
    void for_each(F&& f) {
        for (size_t i : order_) f(keys_[i], vals_[slots_[i]]);
    }

    size_t size() const { return vals_.size(); }

   private:
    static constexpr std::uint32_t kEmpty = 0xffffffffu;

    void grow() {
        size_t cap = slots_.size() * 2;
        std::vector<std::uint32_t> ns(cap, kEmpty);
        std::vector<Monomial> nk(cap);
        std::vector<size_t> norder;
        norder.reserve(order_.size());
        size_t nmask = cap - 1;
        for (size_t i : order_) {
            size_t j = keys_[i].hash() & nmask;
            while (ns[j] != kEmpty) j = (j + 1) & nmask;
            ns[j] = slots_[i];
            nk[j] = keys_[i];
            norder.push_back(j);
        }
        slots_ = std::move(ns);
        keys_ = std::move(nk);
        order_ = std::move(norder);
        mask_ = nmask;
    }

    std::vector<std::uint32_t> slots_;
    std::vector<Monomial> keys_;
    std::vector<C> vals_;
    std::vector<size_t> order_;
    size_t mask_ = 0;
};

}  // namespace detail

/// Sparse exact multivariate polynomial over a coefficient ring C.
/// Terms are kept sorted in descending graded-reverse-lexicographic order
/// with no zero coefficients; equality is term-map equality.
template <class C>
class MultiPoly {
   public:
    struct Term {
        Monomial m;
        C c;
    };

    MultiPoly() = default;

    /// Zero polynomial; `proto` pins the coefficient domain.
    MultiPoly(VarsPtr vars, C proto) : vars_(std::move(vars)), proto_(std::move(proto)) {}

    static MultiPoly constant(VarsPtr vars, const C& c) {
        MultiPoly p(vars, c.zero_like());
        if (!c.is_zero()) p.terms_.push_back(Term{Monomial::unit(), c});
        return p;
    }

    static MultiPoly variable(const VarsPtr& vars, const std::string& name, const C& proto) {
        int i = vars->index_of(name);
        if (i < 0) throw DomainError("MultiPoly: unknown variable " + name);
        MultiPoly p(vars, proto.zero_like());
        p.terms_.push_back(Term{Monomial::var(static_cast<size_t>(i)), proto.one_like()});
        return p;
    }

    static MultiPoly monomial(VarsPtr vars, Monomial m, const C& c) {
        MultiPoly p(vars, c.zero_like());
        if (!c.is_zero()) p.terms_.push_back(Term{m, c});
        return p;
    }

    static MultiPoly from_terms(VarsPtr vars, std::vector<Term> terms, const C& proto) {
        MultiPoly p(std::move(vars), proto.zero_like());
        detail::MonoAccum<C> acc(terms.size());
        for (auto& t : terms) {
            C& slot = acc.at(t.m, p.proto_);
            slot += t.c;
        }
        p.harvest(acc);
        return p;
    }

    MultiPoly zero_like() const { return MultiPoly(vars_, proto_); }
    MultiPoly one_like() const { return constant(vars_, proto_.one_like()); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].m.is_unit() && terms_[0].c.is_one();
    }

    const VarsPtr& vars() const { return vars_; }
    const C& proto() const { return proto_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_unit()); }

    bool is_monomial_poly() const { return terms_.size() == 1; }

    /// Constant term as a coefficient (zero when absent).
    C constant_value() const {
        if (terms_.empty()) return proto_;
        if (terms_.size() == 1 && terms_[0].m.is_unit()) return terms_[0].c;
        for (const auto& t : terms_)
            if (t.m.is_unit()) return t.c;
        return proto_;
    }

    const Term& leading_term() const {
        if (terms_.empty()) throw DomainError("MultiPoly: leading term of zero");
        return terms_.front();
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, t.m.degree());
        return d;
    }

    unsigned degree_in(size_t var) const {
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, t.m.exp(var));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        unsigned d = terms_.front().m.degree();
        for (const auto& t : terms_)
            if (t.m.degree() != d) return false;
        return true;
    }

    /// Weighted degree with per-variable weights (used for the e-basis).
    unsigned weighted_degree(const std::vector<unsigned>& w) const {
        unsigned d = 0;
        for (const auto& t : terms_) {
            unsigned s = 0;
            for (size_t i = 0; i < w.size(); ++i) s += w[i] * t.m.exp(i);
            d = std::max(d, s);
        }
        return d;
    }

    MultiPoly operator-() const {
        MultiPoly r(*this);
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) { return merge(o, false); }
    MultiPoly& operator-=(const MultiPoly& o) { return merge(o, true); }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return multiply(a, b); }
    MultiPoly& operator*=(const MultiPoly& o) {
        *this = multiply(*this, o);
        return *this;
    }

    MultiPoly& scale(const C& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_) t.c *= c;
        prune();
        return *this;
    }

    MultiPoly scaled(const C& c) const {
        MultiPoly r(*this);
        r.scale(c);
        return r;
    }

    MultiPoly& shift(const Monomial& m) {
        for (auto& t : terms_) t.m = t.m.times(m);
        return *this;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (!same_vars(a.vars_, b.vars_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].m != b.terms_[i].m || !(a.terms_[i].c == b.terms_[i].c)) return false;
        return true;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    static MultiPoly multiply(const MultiPoly& a, const MultiPoly& b) {
        check_compat(a, b, "mul");
        MultiPoly r(a.vars_, a.proto_);
        if (a.terms_.empty() || b.terms_.empty()) return r;
        bool safe = degrees_safe(a, b);
        bool square = (&a == &b) || (a == b);
        size_t expected = std::min(a.terms_.size() * b.terms_.size(), size_t(1) << 20);
        detail::MonoAccum<C> acc(expected);
        if (square) {
            const auto& ts = a.terms_;
            for (size_t i = 0; i < ts.size(); ++i) {
                {
                    Monomial m = safe ? ts[i].m.times_unchecked(ts[i].m) : ts[i].m.times(ts[i].m);
                    acc.at(m, a.proto_).add_mul(ts[i].c, ts[i].c);
                }
                for (size_t j = i + 1; j < ts.size(); ++j) {
                    Monomial m = safe ? ts[i].m.times_unchecked(ts[j].m) : ts[i].m.times(ts[j].m);
                    C prod = ts[i].c * ts[j].c;
                    C& slot = acc.at(m, a.proto_);
                    slot += prod;
                    slot += prod;
                }
            }
        } else {
            const auto& small = a.terms_.size() <= b.terms_.size() ? a.terms_ : b.terms_;
            const auto& large = a.terms_.size() <= b.terms_.size() ? b.terms_ : a.terms_;
            for (const auto& ts : small)
                for (const auto& tl : large) {
                    Monomial m = safe ? ts.m.times_unchecked(tl.m) : ts.m.times(tl.m);
                    acc.at(m, a.proto_).add_mul(ts.c, tl.c);
                }
        }
        r.harvest(acc);
        return r;
    }

    MultiPoly pow(unsigned k) const {
        MultiPoly r = constant(vars_, proto_.one_like());
        MultiPoly base(*this);
        while (k) {
            if (k & 1) r = multiply(r, base);
            k >>= 1;
            if (k) base = multiply(base, base);
        }
        return r;
    }

    /// Formal partial derivative with respect to a named variable.
    MultiPoly derivative(const std::string& var) const {
        int vi = vars_->index_of(var);
        if (vi < 0) throw DomainError("derivative: unknown variable " + var);
        return derivative(static_cast<size_t>(vi));
    }

    MultiPoly derivative(size_t vi) const {
        MultiPoly r(vars_, proto_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            unsigned e = t.m.exp(vi);
            if (e == 0) continue;
            C c = t.c;
            C k = proto_.one_like();
            // e is tiny; build the integer scalar by addition
            C mult = proto_.zero_like();
            for (unsigned i = 0; i < e; ++i) mult += k;
            c *= mult;
            if (c.is_zero()) continue;
            Monomial m = t.m;
            m.set(vi, e - 1);
            r.terms_.push_back(Term{m, c});
        }
        r.sort_terms();
        return r;
    }

    /// Exact simultaneous substitution; images must share one ring.
    MultiPoly substitute(const std::vector<std::pair<std::string, MultiPoly>>& bindings) const {
        if (bindings.empty()) return *this;
        const VarsPtr& tvars = bindings.front().second.vars_;
        const C& tproto = bindings.front().second.proto_;
        std::vector<int> bound(vars_->size(), -1);
        for (size_t b = 0; b < bindings.size(); ++b) {
            int vi = vars_->index_of(bindings[b].first);
            if (vi < 0) throw DomainError("substitute: unknown variable " + bindings[b].first);
            if (!same_vars(tvars, bindings[b].second.vars_))
                throw DomainError("substitute: images live in different rings");
            bound[static_cast<size_t>(vi)] = static_cast<int>(b);
        }
        // unbound variables must exist in the target ring
        std::vector<int> remap(vars_->size(), -1);
        for (size_t i = 0; i < vars_->size(); ++i) {
            if (bound[i] >= 0) continue;
            bool used = false;
            for (const auto& t : terms_)
                if (t.m.exp(i)) { used = true; break; }
            if (!used) continue;
            int j = tvars->index_of(vars_->name(i));
            if (j < 0)
                throw DomainError("substitute: unbound variable " + vars_->name(i) + " missing from target ring");
            remap[i] = j;
        }
        // power caches
        std::vector<std::vector<MultiPoly>> powers(bindings.size());
        auto power = [&](size_t b, unsigned e) -> const MultiPoly& {
            auto& cache = powers[b];
            if (cache.empty()) {
                cache.push_back(constant(tvars, tproto.one_like()));
                cache.push_back(bindings[b].second);
            }
            while (cache.size() <= e) cache.push_back(multiply(cache.back(), bindings[b].second));
            return cache[e];
        };
        MultiPoly result(tvars, tproto.zero_like());
        for (const auto& t : terms_) {
            MultiPoly term = constant(tvars, coeff_into(t.c, tproto));
            Monomial residual;
            for (size_t i = 0; i < vars_->size(); ++i) {
                unsigned e = t.m.exp(i);
                if (!e) continue;
                if (bound[i] >= 0)
                    term = multiply(term, power(static_cast<size_t>(bound[i]), e));
                else
                    residual.set(static_cast<size_t>(remap[i]), residual.exp(static_cast<size_t>(remap[i])) + e);
            }
            if (!residual.is_unit()) term.shift(residual);
            result += term;
        }
        return result;
    }

    /// Evaluation at a full point, one value per variable.
    C eval(const std::vector<C>& point) const {
        if (point.size() != vars_->size()) throw DomainError("eval: wrong point size");
        std::vector<std::vector<C>> cache(point.size());
        auto power = [&](size_t i, unsigned e) -> const C& {
            auto& cc = cache[i];
            if (cc.empty()) {
                cc.push_back(proto_.one_like());
                cc.push_back(point[i]);
            }
            while (cc.size() <= e) cc.push_back(cc.back() * point[i]);
            return cc[e];
        };
        C acc = proto_.zero_like();
        for (const auto& t : terms_) {
            C v = t.c;
            for (size_t i = 0; i < point.size(); ++i) {
                unsigned e = t.m.exp(i);
                if (e) v *= power(i, e);
            }
            acc += v;
        }
        return acc;
    }

    /// f(1/u) written as rev / u^D: returns rev(f) and the clearing monomial
    /// u^D with D the per-variable degrees of f.
    std::pair<MultiPoly, Monomial> reciprocal_parts() const {
        Monomial dvec;
        for (size_t i = 0; i < vars_->size(); ++i) dvec.set(i, degree_in(i));
        MultiPoly rev(vars_, proto_);
        rev.terms_.reserve(terms_.size());
        for (const auto& t : terms_) rev.terms_.push_back(Term{dvec.divide(t.m), t.c});
        rev.sort_terms();
        return {rev, dvec};
    }

    /// Quotient q with q*g = *this exactly; throws NotDivisible otherwise.
    MultiPoly divide_exact(const MultiPoly& g) const {
        check_compat(*this, g, "divide_exact");
        if (g.is_zero()) throw DomainError("divide_exact: division by zero polynomial");
        MultiPoly q(vars_, proto_);
        if (is_zero()) return q;
        if (auto ld = g.as_linear_difference()) {
            MultiPoly r = divide_by_linear_difference(ld->first, ld->second, g);
            return r;
        }
        size_t nv = vars_->size();
        std::map<Monomial, C, GrevlexGreater> rem((GrevlexGreater{nv}));
        for (const auto& t : terms_) rem.emplace(t.m, t.c);
        const Monomial& gm = g.terms_.front().m;
        const C& gc = g.terms_.front().c;
        while (!rem.empty()) {
            auto lead = rem.begin();
            if (!gm.divides(lead->first))
                throw NotDivisible("divide_exact: remainder is nonzero",
                                   describe_term(lead->first, lead->second));
            Monomial qm = lead->first.divide(gm);
            C qc = lead->second / gc;
            q.terms_.push_back(Term{qm, qc});
            for (const auto& t : g.terms_) {
                Monomial m = t.m.times(qm);
                C prod = t.c * qc;
                auto it = rem.find(m);
                if (it == rem.end()) {
                    prod = -prod;
                    if (!prod.is_zero()) rem.emplace(m, std::move(prod));
                } else {
                    it->second -= prod;
                    if (it->second.is_zero()) rem.erase(it);
                }
            }
        }
        q.sort_terms();
        return q;
    }

    bool divisible_by(const MultiPoly& g) const {
        try {
            (void)divide_exact(g);
            return true;
        } catch (const NotDivisible&) {
            return false;
        }
    }

    /// Coefficient layers with respect to one variable: result[k] collects
    /// terms with exponent k in `var`, with that exponent cleared.
    std::vector<MultiPoly> layers_in(size_t var) const {
        std::vector<MultiPoly> out(degree_in(var) + 1, MultiPoly(vars_, proto_));
        for (const auto& t : terms_) {
            unsigned e = t.m.exp(var);
            Monomial m = t.m;
            m.set(var, 0);
            out[e].terms_.push_back(Term{m, t.c});
        }
        for (auto& p : out) p.sort_terms();
        return out;
    }

    static MultiPoly from_layers(const VarsPtr& vars, const C& proto, size_t var,
                                 const std::vector<MultiPoly>& layers) {
        MultiPoly r(vars, proto);
        for (size_t k = 0; k < layers.size(); ++k) {
            for (const auto& t : layers[k].terms_) {
                Monomial m = t.m;
                m.set(var, m.exp(var) + static_cast<unsigned>(k));
                r.terms_.push_back(Term{m, t.c});
            }
        }
        r.sort_terms();
        return r;
    }

    /// Common monomial factor of all terms (unit monomial for zero).
    Monomial monomial_content() const {
        if (terms_.empty()) return Monomial::unit();
        Monomial m = terms_.front().m;
        for (const auto& t : terms_) m = m.gcd(t.m);
        return m;
    }

    MultiPoly divide_monomial(const Monomial& m) const {
        MultiPoly r(vars_, proto_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back(Term{t.m.divide(m), t.c});
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            if (!first) os << " + ";
            first = false;
            os << describe_term(t.m, t.c);
        }
        return os.str();
    }

    void sort_terms() {
        size_t nv = vars_->size();
        std::sort(terms_.begin(), terms_.end(), [nv](const Term& a, const Term& b) {
            return grevlex_cmp(a.m, b.m, nv) > 0;
        });
        prune();
    }

   private:
    std::string describe_term(const Monomial& m, const C& c) const {
        std::ostringstream os;
        os << "(" << c.to_string() << ")";
        for (size_t i = 0; i < vars_->size(); ++i) {
            if (unsigned e = m.exp(i)) {
                os << "*" << vars_->name(i);
                if (e > 1) os << "^" << e;
            }
        }
        return os.str();
    }

    // Coefficient carried into another domain exemplar; same type only.
    static C coeff_into(const C& c, const C&) { return c; }

    static void check_compat(const MultiPoly& a, const MultiPoly& b, const char* op) {
        if (!same_vars(a.vars_, b.vars_))
            throw DomainError(std::string("MultiPoly: variable lists differ in ") + op);
    }

    static bool degrees_safe(const MultiPoly& a, const MultiPoly& b) {
        for (size_t i = 0; i < a.vars_->size(); ++i)
            if (a.degree_in(i) + b.degree_in(i) > 255) return false;
        return true;
    }

    std::optional<std::pair<size_t, size_t>> as_linear_difference() const {
        // matches c*(x_a - x_b): the shape of discriminant factors
        if (terms_.size() != 2) return std::nullopt;
        const Term& t0 = terms_[0];
        const Term& t1 = terms_[1];
        if (t0.m.degree() != 1 || t1.m.degree() != 1) return std::nullopt;
        C sum = t0.c + t1.c;
        if (!sum.is_zero()) return std::nullopt;
        size_t a = 16, b = 16;
        for (size_t i = 0; i < vars_->size(); ++i) {
            if (t0.m.exp(i) == 1) a = i;
            if (t1.m.exp(i) == 1) b = i;
        }
        if (a == 16 || b == 16 || a == b) return std::nullopt;
        return std::make_pair(a, b);
    }

    // Exact division by c*(x_a - x_b), layer by layer in x_a.
    MultiPoly divide_by_linear_difference(size_t va, size_t vb, const MultiPoly& g) const {
        const C& lc = g.terms_.front().m.exp(va) == 1 ? g.terms_.front().c : g.terms_.back().c;
        auto layers = layers_in(va);
        size_t dmax = layers.size() - 1;
        if (dmax == 0)
            throw NotDivisible("divide_exact: divisor variable absent", to_string());
        // f = c(x_a - x_b) q + r; matching x_a^k: f_k = c(q_{k-1} - x_b q_k)
        std::vector<MultiPoly> qlayers(dmax, MultiPoly(vars_, proto_));
        MultiPoly carry(vars_, proto_);  // q_k, walking k from top
        for (size_t k = dmax; k >= 1; --k) {
            MultiPoly fk = layers[k];
            fk.scale(proto_.one_like() / lc);
            if (!carry.is_zero()) {
                MultiPoly shifted = carry;
                shifted.shift(Monomial::var(vb));
                fk += shifted;
            }
            qlayers[k - 1] = fk;
            carry = std::move(fk);
        }
        MultiPoly rem = layers[0];
        if (!carry.is_zero()) {
            MultiPoly shifted = carry;
            shifted.shift(Monomial::var(vb));
            shifted.scale(lc);
            rem += shifted;
        }
        if (!rem.is_zero())
            throw NotDivisible("divide_exact: remainder is nonzero", rem.to_string().substr(0, 400));
        return from_layers(vars_, proto_, va, qlayers);
    }

    MultiPoly& merge(const MultiPoly& o, bool subtract) {
        check_compat(*this, o, subtract ? "sub" : "add");
        if (&o == this) {  // self add/sub: double or clear
            if (subtract) {
                terms_.clear();
            } else {
                for (auto& t : terms_) t.c += t.c;
                prune();
            }
            return *this;
        }
        std::vector<Term> out;
        out.reserve(terms_.size() + o.terms_.size());
        size_t nv = vars_->size();
        size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int cmp = grevlex_cmp(terms_[i].m, o.terms_[j].m, nv);
            if (cmp > 0) {
                out.push_back(std::move(terms_[i++]));
            } else if (cmp < 0) {
                Term t = o.terms_[j++];
                if (subtract) t.c = -t.c;
                out.push_back(std::move(t));
            } else {
                Term t = std::move(terms_[i++]);
                if (subtract)
                    t.c -= o.terms_[j++].c;
                else
                    t.c += o.terms_[j++].c;
                if (!t.c.is_zero()) out.push_back(std::move(t));
            }
        }
        while (i < terms_.size()) out.push_back(std::move(terms_[i++]));
        while (j < o.terms_.size()) {
            Term t = o.terms_[j++];
            if (subtract) t.c = -t.c;
            out.push_back(std::move(t));
        }
        terms_ = std::move(out);
        return *this;
    }

    void harvest(detail::MonoAccum<C>& acc) {
        terms_.clear();
        terms_.reserve(acc.size());
        acc.for_each([&](const Monomial& m, C& c) {
            if (!c.is_zero()) terms_.push_back(Term{m, std::move(c)});
        });
        sort_terms();
    }

    void prune() {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                    [](const Term& t) { return t.c.is_zero(); }),
                     terms_.end());
    }

    VarsPtr vars_;
    C proto_;
    std::vector<Term> terms_;
};

/// Convenience aliases for the rings used throughout.
template <class C>
MultiPoly<C> operator*(const MultiPoly<C>& p, const C& c) {
    return p.scaled(c);
}
template <class C>
MultiPoly<C> operator*(const C& c, const MultiPoly<C>& p) {
    return p.scaled(c);
}

}  // namespace fermconic
