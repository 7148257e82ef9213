#pragma once

#include <functional>
#include <map>
#include <tuple>

#include "mdsa/element.hpp"

namespace mdsa {

// Element of A** (x)_M A**. Canonical form: both factors are pure admissible
// monomials, the base scalar attached to the left factor. A scalar s sitting
// in the right factor is passed left via m (x) (s*n) = (eta_r(s)*m) (x) n.
class TensorElement {
public:
    using Key = std::pair<GenMonomial, GenMonomial>;
    using Terms = std::map<Key, BaseScalar>;

    TensorElement() = default;

    static TensorElement zero() { return TensorElement(); }
    static TensorElement unit() {
        TensorElement t;
        t.add_monomial_term(GenMonomial::one(), GenMonomial::one(), BaseScalar::one());
        return t;
    }
    // m (x) n with scalar s on the left
    static TensorElement term(const GenMonomial& l, const GenMonomial& r,
                              const BaseScalar& s = BaseScalar::one()) {
        TensorElement t;
        t.add_monomial_term(l, r, s);
        return t;
    }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    BaseScalar coefficient(const GenMonomial& l, const GenMonomial& r) const {
        auto it = terms_.find({l, r});
        return it == terms_.end() ? BaseScalar::zero() : it->second;
    }

    void add_monomial_term(const GenMonomial& l, const GenMonomial& r, const BaseScalar& s) {
        if (s.is_zero()) return;
        BaseScalar& slot = terms_[{l, r}];
        slot += s;
        if (slot.is_zero()) terms_.erase({l, r});
    }

    // general two-sided term: scalars in `right` are passed left via eta_r
    void add_term(const BaseScalar& s, const AElement& left, const AElement& right);

    friend bool operator==(const TensorElement&, const TensorElement&) = default;

    friend TensorElement operator+(const TensorElement& x, const TensorElement& y) {
        TensorElement r = x;
        for (const auto& [k, s] : y.terms_) r.add_monomial_term(k.first, k.second, s);
        return r;
    }
    TensorElement& operator+=(const TensorElement& o) { return *this = *this + o; }

    friend TensorElement operator*(const TensorElement& x, const TensorElement& y);
    friend TensorElement operator*(const BaseScalar& s, const TensorElement& x) {
        TensorElement r;
        for (const auto& [k, c] : x.terms_) r.add_monomial_term(k.first, k.second, s * c);
        return r;
    }

    TensorElement squared() const;
    TensorElement pow(int k) const;

    std::string str() const;

private:
    Terms terms_;
};

// normalization of raw two-sided tensor data (the tensor_normalize operation)
TensorElement tensor_normalize(const BaseScalar& s, const AElement& left,
                               const AElement& right);

// Triple tensor for the coassociativity check; canonical scalars in slot 1,
// passed leftward across each tensor sign via eta_r.
class TripleTensor {
public:
    using Key = std::tuple<GenMonomial, GenMonomial, GenMonomial>;
    using Terms = std::map<Key, BaseScalar>;

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    void add_monomial_term(const Key& k, const BaseScalar& s) {
        if (s.is_zero()) return;
        BaseScalar& slot = terms_[k];
        slot += s;
        if (slot.is_zero()) terms_.erase(k);
    }
    // scalars of `c` pass to slot 2 via eta_r, then slot 2's scalars to slot 1
    void add_term(const BaseScalar& s, const AElement& a, const AElement& b,
                  const AElement& c);

    friend bool operator==(const TripleTensor&, const TripleTensor&) = default;

private:
    Terms terms_;
};

// Coproduct on generators, overridable for fault-injection tests.
using GenCoproduct = std::function<TensorElement(const Generator&)>;

TensorElement psi_generator(const Generator& g);
TensorElement psi(const AElement& a);
TensorElement psi(const AElement& a, const GenCoproduct& gen_psi);

// (psi (x) id) and (id (x) psi) of a tensor
TripleTensor psi_left_slot(const TensorElement& t, const GenCoproduct& gen_psi);
TripleTensor psi_right_slot(const TensorElement& t, const GenCoproduct& gen_psi);

// counit contractions: (eps (x) id) psi and (id (x) eps) psi collapse
AElement contract_left_counit(const TensorElement& t);
AElement contract_right_counit(const TensorElement& t);

} // namespace mdsa
