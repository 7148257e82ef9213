#pragma once

#include <map>

#include "mdsa/series.hpp"

namespace mdsa {

// u^a v^b monomial key for H**(B_et Sigma_2); u-exponent always in {0,1}
struct UV {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const UV&, const UV&) = default;
    std::string str() const {
        if (u == 0 && v == 0) return "1";
        std::string s;
        if (u) s = "u";
        if (v != 0) {
            if (!s.empty()) s += "*";
            s += (v == 1) ? "v" : "v^" + std::to_string(v);
        }
        return s;
    }
};

// Element of H**(B_et Sigma_2) = M[u,v]/(u^2 = tau v + rho u), optionally
// with v inverted. Grading: |u| = (-1,-1), |v| = (-2,-1) homologically.
class BSigmaElement {
public:
    using Terms = std::map<UV, BaseScalar>;

    BSigmaElement() = default;

    static BSigmaElement zero() { return BSigmaElement(); }
    static BSigmaElement one() { return monomial({0, 0}); }
    static BSigmaElement u() { return monomial({1, 0}); }
    static BSigmaElement v(int power = 1) { return monomial({0, power}); }
    static BSigmaElement monomial(UV m, BaseScalar s = BaseScalar::one()) {
        BSigmaElement e;
        e.add_term(m, s);
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    BaseScalar coefficient(UV m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? BaseScalar::zero() : it->second;
    }
    bool polynomial() const {
        for (const auto& [m, s] : terms_)
            if (m.v < 0) return false;
        return true;
    }
    bool f2_coefficients() const {
        for (const auto& [m, s] : terms_)
            if (!s.is_one()) return false;
        return true;
    }

    void add_term(UV m, const BaseScalar& s) {
        if (s.is_zero()) return;
        if (m.u < 0 || m.u > 1) throw std::logic_error("u exponent not in {0,1}");
        BaseScalar& slot = terms_[m];
        slot += s;
        if (slot.is_zero()) terms_.erase(m);
    }

    friend bool operator==(const BSigmaElement&, const BSigmaElement&) = default;

    friend BSigmaElement operator+(const BSigmaElement& x, const BSigmaElement& y) {
        BSigmaElement r = x;
        for (const auto& [m, s] : y.terms_) r.add_term(m, s);
        return r;
    }
    BSigmaElement& operator+=(const BSigmaElement& o) {
        for (const auto& [m, s] : o.terms_) add_term(m, s);
        return *this;
    }

    // product with u^2 rewritten to tau v + rho u
    friend BSigmaElement operator*(const BSigmaElement& x, const BSigmaElement& y);
    friend BSigmaElement operator*(const BaseScalar& s, const BSigmaElement& x) {
        BSigmaElement r;
        for (const auto& [m, c] : x.terms_) r.add_term(m, s * c);
        return r;
    }

    BSigmaElement pow(int k) const;

    std::optional<Bidegree> bidegree() const {
        std::optional<Bidegree> d;
        for (const auto& [m, s] : terms_) {
            Bidegree md{-m.u - 2 * m.v, -m.u - m.v};
            for (const BaseScalar::Mono& sm : s.monos()) {
                Bidegree t = md + sm.bidegree();
                if (!d) d = t;
                else if (*d != t) return std::nullopt;
            }
        }
        return d;
    }

    std::string str() const;

private:
    Terms terms_;
};

// bs_mul operation name from the module contract
inline BSigmaElement bs_mul(const BSigmaElement& a, const BSigmaElement& b) {
    return a * b;
}

// Element of H**(B_et Sigma_2) (x)^ A**, A-coefficients on the right factor.
// Carries a v-exactness window with the same semantics as LaurentSeries:
// coefficients of v^m are provably zero below vlo, stored exactly on
// [vlo, vhi], unknown above.
class BSigmaTensor {
public:
    static constexpr int kInf = 1 << 28;
    using Terms = std::map<UV, AElement>;

    BSigmaTensor() : vlo_(kInf), vhi_(kInf) {}

    static BSigmaTensor zero() { return BSigmaTensor(); }
    static BSigmaTensor one() { return term({0, 0}, AElement::one()); }
    static BSigmaTensor term(UV m, const AElement& a) {
        BSigmaTensor t;
        if (a.is_zero()) return t;
        t.vlo_ = m.v;
        t.vhi_ = kInf;
        t.terms_[m] = a;
        return t;
    }
    // lift of an A-element: 1 (x) a
    static BSigmaTensor lift(const AElement& a) { return term({0, 0}, a); }

    int vlo() const { return vlo_; }
    int vhi() const { return vhi_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    AElement coefficient(UV m) const {
        if (m.v > vhi_)
            throw TruncationError("BSigmaTensor: v^" + std::to_string(m.v) +
                                  " exceeds the exactness window");
        auto it = terms_.find(m);
        return it == terms_.end() ? AElement::zero() : it->second;
    }

    void add_term(UV m, const AElement& a) {
        if (a.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, a);
        } else {
            it->second += a;
            if (it->second.is_zero()) terms_.erase(m);
        }
        if (m.v < vlo_) vlo_ = m.v;
    }

    int val() const {
        if (!terms_.empty()) return terms_.begin()->first.v;
        return vhi_ == kInf ? kInf : vhi_ + 1;
    }

    BSigmaTensor truncated(Window w) const {
        BSigmaTensor r;
        r.vlo_ = std::max(vlo_, w.lo);
        r.vhi_ = std::min(vhi_, w.hi);
        for (const auto& [m, a] : terms_)
            if (m.v >= w.lo && m.v <= w.hi) r.terms_[m] = a;
        if (r.terms_.empty() && r.vhi_ == kInf) r.vlo_ = kInf;
        return r;
    }

    bool exact_on(Window w) const { return vhi_ >= w.hi; }

    friend bool operator==(const BSigmaTensor& x, const BSigmaTensor& y) {
        return x.terms_ == y.terms_;
    }

    friend BSigmaTensor operator+(const BSigmaTensor& f, const BSigmaTensor& g) {
        BSigmaTensor r;
        r.vlo_ = std::min(f.vlo_, g.vlo_);
        r.vhi_ = std::min(f.vhi_, g.vhi_);
        for (const auto& [m, a] : f.terms_)
            if (m.v <= r.vhi_) r.add_term(m, a);
        for (const auto& [m, a] : g.terms_)
            if (m.v <= r.vhi_) r.add_term(m, a);
        return r;
    }

    friend BSigmaTensor operator*(const BSigmaTensor& f, const BSigmaTensor& g);

    // multiply every A-coefficient (plain scalar action on the right factor)
    friend BSigmaTensor operator*(const AElement& a, const BSigmaTensor& f) {
        BSigmaTensor r;
        r.vlo_ = f.vlo_;
        r.vhi_ = f.vhi_;
        for (const auto& [m, c] : f.terms_) r.add_term(m, a * c);
        if (r.terms_.empty() && r.vhi_ == kInf) r.vlo_ = kInf;
        return r;
    }

    std::string str() const;

private:
    static int sat(long long x) {
        if (x >= kInf) return kInf;
        if (x <= -kInf) return -kInf;
        return int(x);
    }
    int vlo_, vhi_;
    Terms terms_;
};

// right coaction, ring-map extension of
//   psi_R(v) = sum v^{2^i} (x) xi_i,  psi_R(u) = u (x) 1 + sum v^{2^i} (x) tau_i,
// with negative v-powers via psi_R(v^k) = sum_j v^j (x) [xi(t)^k]_{t^j};
// input scalars enter the A-factor through eta_R
BSigmaTensor psi_r_bsigma(const BSigmaElement& x, Window v_window);

// power operations on B Sigma_2 classes: table on u and v^{2^i}, extended by
// additivity and the Cartan formula; v-exponents decomposed in binary
BSigmaElement q_on_bsigma(int i, const BSigmaElement& x);

// Sq^i = Q^{-i}
BSigmaElement sq_on_bsigma(int i, const BSigmaElement& x);

// full Cartan expansion of Q^r(y v^{2^m}) collapses to
// Q^r(y) v^{2^m} + Q^{r+2^{m+1}}(y) v^{2^{m+1}}
CheckReport cartan_v_rule_check(int r_lo, int r_hi, int m_max);

// psi_R ring-map property on random polynomial pairs, including
// psi_R(u)^2 = psi_R(tau v + rho u)
CheckReport verify_psi_r_ring_map(int cases, unsigned seed, Window v_window);

} // namespace mdsa
