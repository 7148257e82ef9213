#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "mdsa/element.hpp"
#include "mdsa/report.hpp"

namespace mdsa {

struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyWindowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Window {
    int lo = -40;
    int hi = 40;
};

// Window-truncated Laurent series in t over a coefficient ring C, with an
// optional marker s of square zero attached to the coefficient key.
//
// Window semantics: coefficients below lo are provably zero, coefficients in
// [lo, hi] are stored exactly, coefficients above hi are unknown (truncated).
// hi == kInf means the series is known exactly everywhere. Every arithmetic
// result carries the largest window on which it is exact.
//
// C must provide: default construction (zero), is_zero(), operator+,
// operator*, operator==, static C::one().
template <class C>
class LaurentSeries {
public:
    static constexpr int kInf = 1 << 28;

    struct Key {
        int t = 0;
        int s = 0; // in {0, 1}
        friend auto operator<=>(const Key&, const Key&) = default;
    };
    using Terms = std::map<Key, C>;

    LaurentSeries() : lo_(kInf), hi_(kInf) {} // exact zero

    static LaurentSeries zero() { return LaurentSeries(); }
    static LaurentSeries constant(const C& c) { return monomial(c, 0, 0); }
    static LaurentSeries one() { return constant(C::one()); }
    static LaurentSeries t_power(int k) { return monomial(C::one(), k, 0); }
    static LaurentSeries monomial(const C& c, int t_exp, int s_exp = 0) {
        LaurentSeries f;
        if (c.is_zero()) return f;
        if (s_exp < 0 || s_exp > 1) throw std::invalid_argument("s exponent not in {0,1}");
        f.lo_ = t_exp;
        f.hi_ = kInf;
        f.terms_[{t_exp, s_exp}] = c;
        return f;
    }

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    const Terms& terms() const { return terms_; }
    bool no_terms() const { return terms_.empty(); }
    bool has_s_terms() const {
        for (const auto& [k, c] : terms_)
            if (k.s) return true;
        return false;
    }

    // proven lower bound for the valuation
    int val() const {
        if (!terms_.empty()) return terms_.begin()->first.t;
        return hi_ == kInf ? kInf : sat(hi_ + 1);
    }

    // stored coefficient; zero below the window, error above it
    C coeff(int t_exp, int s_exp = 0) const {
        if (t_exp > hi_)
            throw TruncationError("coefficient of t^" + std::to_string(t_exp) +
                                  " exceeds truncation window (exact up to t^" +
                                  std::to_string(hi_) + ")");
        auto it = terms_.find({t_exp, s_exp});
        return it == terms_.end() ? C() : it->second;
    }

    void add_term(int t_exp, int s_exp, const C& c) {
        if (c.is_zero()) return;
        if (s_exp > 1) return; // s^2 = 0
        Key k{t_exp, s_exp};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
        if (t_exp < lo_) lo_ = t_exp;
    }

    LaurentSeries shifted(int k) const {
        LaurentSeries r;
        r.lo_ = sat(lo_ + k);
        r.hi_ = sat(hi_ + k);
        for (const auto& [key, c] : terms_) r.terms_[{key.t + k, key.s}] = c;
        return r;
    }

    // restrict the exactness window (drops data above hi, raises lo bound)
    LaurentSeries truncated(Window w) const {
        LaurentSeries r;
        r.lo_ = std::max(lo_, w.lo);
        r.hi_ = std::min(hi_, w.hi);
        for (const auto& [k, c] : terms_)
            if (k.t >= w.lo && k.t <= w.hi) r.terms_[k] = c;
        if (r.terms_.empty() && r.hi_ == kInf) r.lo_ = kInf;
        return r;
    }

    friend LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) {
        LaurentSeries r;
        r.lo_ = std::min(f.lo_, g.lo_);
        r.hi_ = std::min(f.hi_, g.hi_);
        if (r.hi_ < r.lo_ && !(f.no_terms() && g.no_terms()))
            throw EmptyWindowError("series_add: empty exactness window");
        for (const auto& [k, c] : f.terms_)
            if (k.t <= r.hi_) r.add_term(k.t, k.s, c);
        for (const auto& [k, c] : g.terms_)
            if (k.t <= r.hi_) r.add_term(k.t, k.s, c);
        r.lo_ = std::min(r.lo_, std::min(f.lo_, g.lo_));
        return r;
    }

    friend LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) {
        LaurentSeries r;
        int vf = f.val(), vg = g.val();
        if (vf == kInf || vg == kInf) return zero();
        r.lo_ = sat(vf + vg);
        r.hi_ = std::min(sat(f.hi_ + vg), sat(vf + g.hi_));
        if (r.hi_ < r.lo_) throw EmptyWindowError("series_mul: empty exactness window");
        for (const auto& [ka, ca] : f.terms_) {
            for (const auto& [kb, cb] : g.terms_) {
                int te = ka.t + kb.t;
                int se = ka.s + kb.s;
                if (te > r.hi_ || se > 1) continue;
                C prod = ca * cb;
                if (prod.is_zero()) continue;
                r.add_term(te, se, prod);
            }
        }
        return r;
    }

    // termwise squaring (commutative, characteristic 2; s^2 = 0)
    LaurentSeries squared() const {
        LaurentSeries r;
        int v = val();
        if (v == kInf) return zero();
        r.lo_ = sat(2 * v);
        r.hi_ = sat(v + hi_);
        for (const auto& [k, c] : terms_) {
            if (k.s) continue;
            if (2 * k.t > r.hi_) continue;
            C sq = c * c;
            if (!sq.is_zero()) r.terms_[{2 * k.t, 0}] = sq;
        }
        return r;
    }

    std::string str() const;

private:
    static int sat(long long x) {
        if (x >= kInf) return kInf;
        if (x <= -kInf) return -kInf;
        return int(x);
    }

    int lo_, hi_;
    Terms terms_;
};

// f^k for k in Z; for k < 0 the lowest-order coefficient must be 1
template <class C>
LaurentSeries<C> series_int_pow(const LaurentSeries<C>& f, int k) {
    using S = LaurentSeries<C>;
    if (k == 0) return S::one();
    if (k < 0) {
        if (f.has_s_terms())
            throw std::invalid_argument("series_int_pow: s-terms not invertible");
        int v = f.val();
        if (v == S::kInf)
            throw std::invalid_argument("series_int_pow: zero series not invertible");
        if (!(f.coeff(v) == C::one()))
            throw std::invalid_argument(
                "series_int_pow: lowest-order coefficient is not 1");
        if (f.terms().size() == 1)
            return S::monomial(C::one(), v * k); // pure power of t
        if (f.hi() == S::kInf)
            throw std::invalid_argument(
                "series_int_pow: exact polynomial inverse needs a truncation window");
        // f = t^v (1 + u), val(u) >= 1; invert the unit part by Horner
        S u = f.shifted(-v);
        u.add_term(0, 0, C::one()); // subtract the leading 1 (char 2)
        S inv = S::one();
        int steps = std::max(0, u.hi());
        for (int i = 0; i < steps; ++i) inv = S::one() + u * inv;
        inv = inv.shifted(-v);
        return series_int_pow(inv, -k);
    }
    S r = S::one(), base = f;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base.squared();
        k >>= 1;
    }
    return r;
}

// f(g(t)); g must have valuation >= 1, both s-free
template <class C>
LaurentSeries<C> series_compose(const LaurentSeries<C>& f, const LaurentSeries<C>& g) {
    using S = LaurentSeries<C>;
    if (f.has_s_terms() || g.has_s_terms())
        throw std::invalid_argument("series_compose: s-terms not supported");
    if (g.val() < 1)
        throw std::invalid_argument("series_compose: inner series must have valuation >= 1");
    if (f.no_terms()) return S::zero();
    int kmin = f.val();
    int kmax = (f.hi() == S::kInf) ? f.terms().rbegin()->first.t : f.hi();
    // Horner from the top: sum_{k>=kmin} f_k g^{k-kmin}, then * g^kmin
    S acc = S::constant(f.coeff(kmax));
    for (int k = kmax - 1; k >= kmin; --k) {
        acc = acc * g;
        C fk = f.coeff(k);
        if (!fk.is_zero()) acc = acc + S::constant(fk);
    }
    if (kmin != 0) acc = acc * series_int_pow(g, kmin);
    // the unknown f-tail contributes from (hi_f + 1) * val(g) upward
    if (f.hi() != S::kInf) {
        long long cap = (long long)(f.hi() + 1) * g.val() - 1;
        acc = acc.truncated({acc.lo(), int(std::min<long long>(cap, S::kInf))});
    }
    return acc;
}

// coefficient extraction (the series_coeff operation)
template <class C>
C series_coeff(const LaurentSeries<C>& f, int j, int s_deg = 0) {
    return f.coeff(j, s_deg);
}

// both series exact on [w.lo, w.hi] and equal there (s-degrees 0 and 1)
template <class C>
bool series_equal_on(const LaurentSeries<C>& f, const LaurentSeries<C>& g, Window w,
                     std::string* witness = nullptr) {
    if (f.hi() < w.hi || g.hi() < w.hi)
        throw TruncationError("series_equal_on: operands not exact on requested window");
    for (int j = w.lo; j <= w.hi; ++j) {
        for (int s = 0; s <= 1; ++s) {
            if (f.coeff(j, s) == g.coeff(j, s)) continue;
            if (witness)
                *witness = "t^" + std::to_string(j) + (s ? "*s" : "") + ": lhs != rhs";
            return false;
        }
    }
    return true;
}

using ASeries = LaurentSeries<AElement>;

// generating functions xi(t) = sum xi_i t^{2^i} (xi_0 = 1),
// tau(t) = sum tau_i t^{2^i}, and their conjugates with chi-coefficients
ASeries xi_series(Window w);
ASeries tau_series(Window w);
ASeries xi_bar_series(Window w);
ASeries tau_bar_series(Window w);

// checks [xi(t)^r tau(t)]_{t^s} = [taubar(t) xibar(t)^{-s-1}]_{t^{-r-1}} and
// [xi(t)^r]_{t^s} = [xibar(t)^{-s-1}]_{t^{-r-1}} over the given ranges
CheckReport verify_inversion_trick(int r_lo, int r_hi, int s_lo, int s_hi, Window w);

// Lemma comp-inv: xi(xibar(t)) = t, tau(xibar(t)) = taubar(t),
// taubar(xi(t)) = tau(t), coefficientwise up to w.hi
CheckReport verify_comp_inv(Window w);

template <class C>
std::string LaurentSeries<C>::str() const {
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")";
        if (k.t != 0) out += "*t^" + std::to_string(k.t);
        if (k.s) out += "*s";
    }
    if (out.empty()) out = "0";
    out += "   [exact on " + std::to_string(lo_) + ".." +
           (hi_ == kInf ? std::string("inf") : std::to_string(hi_)) + "]";
    return out;
}

} // namespace mdsa
