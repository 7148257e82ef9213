#pragma once

#include "mdsa/bsigma.hpp"

namespace mdsa {

// M-combination of the basis classes e_i of pi_** Ops, with a suspension
// flag shifting bidegrees by (1,0). |e_{2n}| = (2n, n), |e_{2n+1}| = (2n+1, n+1).
class OpsElement {
public:
    using Terms = std::map<int, BaseScalar>;

    OpsElement() = default;
    explicit OpsElement(bool suspended) : suspended_(suspended) {}

    static OpsElement basis(int i, bool suspended = false) {
        OpsElement e(suspended);
        e.add_term(i, BaseScalar::one());
        return e;
    }

    bool suspended() const { return suspended_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    BaseScalar coefficient(int i) const {
        auto it = terms_.find(i);
        return it == terms_.end() ? BaseScalar::zero() : it->second;
    }

    void add_term(int i, const BaseScalar& s) {
        if (s.is_zero()) return;
        BaseScalar& slot = terms_[i];
        slot += s;
        if (slot.is_zero()) terms_.erase(i);
    }

    friend bool operator==(const OpsElement&, const OpsElement&) = default;

    friend OpsElement operator+(const OpsElement& x, const OpsElement& y) {
        if (!x.is_zero() && !y.is_zero() && x.suspended_ != y.suspended_)
            throw std::logic_error("OpsElement: suspension mismatch");
        OpsElement r = x.is_zero() ? y : x;
        if (!x.is_zero() && !y.is_zero())
            for (const auto& [i, s] : y.terms_) r.add_term(i, s);
        return r;
    }
    friend OpsElement operator*(const BaseScalar& s, const OpsElement& x) {
        OpsElement r(x.suspended_);
        for (const auto& [i, c] : x.terms_) r.add_term(i, s * c);
        return r;
    }

    static Bidegree basis_bidegree(int i, bool suspended) {
        Bidegree d;
        if (((i % 2) + 2) % 2 == 0) d = {i, i / 2};   // e_{2n}: (2n, n)
        else d = {i, (i - 1) / 2 + 1};                // e_{2n+1}: (2n+1, n+1)
        if (suspended) d += {1, 0};
        return d;
    }

    std::optional<Bidegree> bidegree() const {
        std::optional<Bidegree> d;
        for (const auto& [i, s] : terms_) {
            Bidegree bd = basis_bidegree(i, suspended_);
            for (const BaseScalar::Mono& sm : s.monos()) {
                Bidegree t = bd + sm.bidegree();
                if (!d) d = t;
                else if (*d != t) return std::nullopt;
            }
        }
        return d;
    }

    std::string str() const;

private:
    bool suspended_ = false;
    Terms terms_;
};

// Element of A** (x)^ pi_** Ops, A-coefficients on the left; exact on a
// declared window of basis indices.
class OpsTensor {
public:
    static constexpr int kInf = 1 << 28;
    using Terms = std::map<int, AElement>;

    OpsTensor() : suspended_(false), elo_(kInf), ehi_(-kInf) {}
    OpsTensor(bool suspended, int elo, int ehi)
        : suspended_(suspended), elo_(elo), ehi_(ehi) {}

    bool suspended() const { return suspended_; }
    int elo() const { return elo_; }
    int ehi() const { return ehi_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    AElement coefficient(int i) const {
        if (i < elo_ || i > ehi_)
            throw TruncationError("OpsTensor: e_" + std::to_string(i) +
                                  " outside the exactness window");
        auto it = terms_.find(i);
        return it == terms_.end() ? AElement::zero() : it->second;
    }

    void add_term(int i, const AElement& a) {
        if (a.is_zero()) return;
        auto it = terms_.find(i);
        if (it == terms_.end()) {
            terms_.emplace(i, a);
        } else {
            it->second += a;
            if (it->second.is_zero()) terms_.erase(i);
        }
    }

    OpsTensor restricted(int lo, int hi) const {
        OpsTensor r(suspended_, std::max(lo, elo_), std::min(hi, ehi_));
        for (const auto& [i, a] : terms_)
            if (i >= r.elo_ && i <= r.ehi_) r.terms_.emplace(i, a);
        return r;
    }

    friend OpsTensor operator+(const OpsTensor& x, const OpsTensor& y) {
        OpsTensor r(x.suspended_ || y.suspended_, std::max(x.elo_, y.elo_),
                    std::min(x.ehi_, y.ehi_));
        for (const auto& [i, a] : x.terms_)
            if (i >= r.elo_ && i <= r.ehi_) r.add_term(i, a);
        for (const auto& [i, a] : y.terms_)
            if (i >= r.elo_ && i <= r.ehi_) r.add_term(i, a);
        return r;
    }
    friend OpsTensor operator*(const AElement& a, const OpsTensor& x) {
        OpsTensor r(x.suspended_, x.elo_, x.ehi_);
        for (const auto& [i, c] : x.terms_) r.add_term(i, a * c);
        return r;
    }

    // equality of stored data on the window overlap
    bool equal_on(const OpsTensor& o, int lo, int hi, std::string* witness = nullptr) const;

    std::string str() const;

private:
    bool suspended_;
    int elo_, ehi_;
    Terms terms_;
};

// t(v^i) = Sigma e_{-2i-1}, t(u v^i) = Sigma e_{-2i-2} + rho Sigma e_{-2i-1},
// extended M-linearly; the input must be an M-combination of v^i, u v^i
OpsElement t_map(const BSigmaElement& x);

// left coaction on a basis class e_k:
//   psi_L(e_{2k})   = sum_j [xi(t)^j]_{t^k} (x) e_{2j}
//                   + sum_j [tau(t) xi(t)^j]_{t^k} (x) e_{2j+1}
//   psi_L(e_{2k+1}) = sum_j [xi(t)^j]_{t^k} (x) e_{2j+1}
// j runs over j_window
OpsTensor psi_l_basis(int k, Window j_window, bool suspended = false);

// M-linear extension (scalars pass through eta_R on the A-factor; only
// rho-multiples occur in t-images, where eta_R is the identity)
OpsTensor psi_l_ops(const OpsElement& x, Window j_window);

// checks psi_L(t(x)) = (chi (x) t) sw psi_R(x) for x in {v^i, u v^i}
CheckReport verify_ops_compat(int i_lo, int i_hi, int window);

// counit and bidegree bookkeeping of psi_L over a range of basis classes
CheckReport verify_psi_l_properties(int k_lo, int k_hi, Window j_window);

} // namespace mdsa
