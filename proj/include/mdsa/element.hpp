#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "mdsa/base_scalar.hpp"
#include "mdsa/monomial.hpp"

namespace mdsa {

struct InhomogeneousError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of the dual Steenrod algebra A**: finite M-linear combination of
// admissible monomials, canonical (no zero scalars stored).
class AElement {
public:
    using Terms = std::map<GenMonomial, BaseScalar>;

    AElement() = default;

    static AElement zero() { return AElement(); }
    static AElement one() { return term(GenMonomial::one(), BaseScalar::one()); }
    static AElement scalar(const BaseScalar& s) { return term(GenMonomial::one(), s); }
    static AElement monomial(const GenMonomial& m) { return term(m, BaseScalar::one()); }
    static AElement tau(int i) { return monomial(GenMonomial::tau(i)); }
    static AElement xi(int i, int exp = 1) { return monomial(GenMonomial::xi(i, exp)); }
    static AElement generator(const Generator& g) { return monomial(GenMonomial::from(g)); }
    static AElement term(const GenMonomial& m, const BaseScalar& s) {
        AElement e;
        e.add_term(m, s);
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    BaseScalar coefficient(const GenMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? BaseScalar::zero() : it->second;
    }

    // all coefficients equal to 1 in F2 (no tau/rho scalars)
    bool f2_coefficients() const {
        for (const auto& [m, s] : terms_)
            if (!s.is_one()) return false;
        return true;
    }

    void add_term(const GenMonomial& m, const BaseScalar& s) {
        if (s.is_zero()) return;
        BaseScalar& slot = terms_[m];
        slot += s;
        if (slot.is_zero()) terms_.erase(m);
    }

    friend bool operator==(const AElement&, const AElement&) = default;
    friend bool operator<(const AElement& x, const AElement& y) {
        return std::lexicographical_compare(
            x.terms_.begin(), x.terms_.end(), y.terms_.begin(), y.terms_.end(),
            [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first < b.first;
                return a.second < b.second;
            });
    }

    friend AElement operator+(const AElement& x, const AElement& y) {
        AElement r = x;
        for (const auto& [m, s] : y.terms_) r.add_term(m, s);
        return r;
    }
    AElement& operator+=(const AElement& o) {
        for (const auto& [m, s] : o.terms_) add_term(m, s);
        return *this;
    }

    friend AElement operator*(const AElement& x, const AElement& y);
    AElement& operator*=(const AElement& o) { return *this = *this * o; }

    friend AElement operator*(const BaseScalar& s, const AElement& x) {
        AElement r;
        for (const auto& [m, c] : x.terms_) r.add_term(m, s * c);
        return r;
    }

    // termwise squaring (valid: commutative, characteristic 2)
    AElement squared() const;
    AElement pow(int k) const;

    // common bidegree of all (scalar monomial, generator monomial) pairs
    std::optional<Bidegree> bidegree() const {
        std::optional<Bidegree> d;
        for (const auto& [m, s] : terms_) {
            Bidegree md = m.bidegree();
            for (const BaseScalar::Mono& sm : s.monos()) {
                Bidegree t = md + sm.bidegree();
                if (!d) d = t;
                else if (*d != t) return std::nullopt;
            }
        }
        return d;
    }
    bool homogeneous() const { return is_zero() || bidegree().has_value(); }

    std::string str() const;

private:
    Terms terms_;
};

// --- core_algebra operations ---

AElement elem_add(const AElement& a, const AElement& b);
AElement elem_mul(const AElement& a, const AElement& b);

// common bidegree; throws InhomogeneousError listing the distinct bidegrees
Bidegree bidegree_of(const AElement& a);

// coefficient of the empty monomial
BaseScalar counit(const AElement& a);

// right unit: tau -> tau + rho*tau_0, rho -> rho, extended multiplicatively
AElement eta_r(const BaseScalar& c);

namespace detail {

// Raw monomial data with unrestricted tau exponents; reduced to admissible
// form by rewriting tau_i^2 = tau*xi_{i+1} + rho*tau_{i+1} + rho*tau_0*xi_{i+1}.
// `pick` chooses which squared index to rewrite next (used by the confluence
// property test); defaults to the smallest.
using TauCounts = std::map<int, int>;
using XiCounts = std::map<int, int>;
using RewritePicker = std::function<int(const std::vector<int>&)>;

void reduce_raw(TauCounts taus, XiCounts xis, BaseScalar s, AElement& acc,
                const RewritePicker& pick);

AElement mul_monomials(const GenMonomial& a, const GenMonomial& b,
                       const RewritePicker& pick);

} // namespace detail

} // namespace mdsa
