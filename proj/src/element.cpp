#include "mdsa/element.hpp"

#include <set>
#include <sstream>

namespace mdsa {

namespace detail {

static int smallest_pick(const std::vector<int>& candidates) { return candidates[0]; }

void reduce_raw(TauCounts taus, XiCounts xis, BaseScalar s, AElement& acc,
                const RewritePicker& pick) {
    if (s.is_zero()) return;
    std::vector<int> squared;
    for (auto& [i, c] : taus)
        if (c >= 2) squared.push_back(i);
    if (squared.empty()) {
        GenMonomial m;
        for (auto& [i, c] : taus)
            if (c == 1) m.set_tau(i);
        for (auto& [i, c] : xis)
            if (c > 0) m.set_xi(i, c);
        acc.add_term(m, s);
        return;
    }
    int i = pick(squared);
    taus[i] -= 2;

    // tau * xi_{i+1}
    {
        XiCounts x = xis;
        x[i + 1] += 1;
        reduce_raw(taus, x, s * BaseScalar::tau(), acc, pick);
    }
    // rho * tau_{i+1}
    {
        TauCounts t = taus;
        t[i + 1] += 1;
        reduce_raw(t, xis, s * BaseScalar::rho(), acc, pick);
    }
    // rho * tau_0 * xi_{i+1}
    {
        TauCounts t = taus;
        t[0] += 1;
        XiCounts x = xis;
        x[i + 1] += 1;
        reduce_raw(t, x, s * BaseScalar::rho(), acc, pick);
    }
}

AElement mul_monomials(const GenMonomial& a, const GenMonomial& b,
                       const RewritePicker& pick) {
    if ((a.tau_mask() & b.tau_mask()) == 0) {
        // no tau collision, stays admissible
        GenMonomial m;
        for (int i = 0; i < 63; ++i)
            if (a.has_tau(i) || b.has_tau(i)) m.set_tau(i);
        for (auto [i, r] : a.xi_exps()) m.set_xi(i, r);
        for (auto [i, r] : b.xi_exps()) m.set_xi(i, r);
        return AElement::monomial(m);
    }
    TauCounts taus;
    XiCounts xis;
    for (int i = 0; i < 63; ++i) {
        int c = int(a.has_tau(i)) + int(b.has_tau(i));
        if (c) taus[i] = c;
    }
    for (auto [i, r] : a.xi_exps()) xis[i] += r;
    for (auto [i, r] : b.xi_exps()) xis[i] += r;
    AElement acc;
    reduce_raw(std::move(taus), std::move(xis), BaseScalar::one(), acc,
               pick ? pick : smallest_pick);
    return acc;
}

} // namespace detail

AElement operator*(const AElement& x, const AElement& y) {
    AElement r;
    for (const auto& [ma, sa] : x.terms()) {
        for (const auto& [mb, sb] : y.terms()) {
            BaseScalar s = sa * sb;
            AElement prod = detail::mul_monomials(ma, mb, nullptr);
            for (const auto& [m, c] : prod.terms()) r.add_term(m, s * c);
        }
    }
    return r;
}

AElement AElement::squared() const {
    AElement r;
    for (const auto& [m, s] : terms_) {
        detail::TauCounts taus;
        detail::XiCounts xis;
        for (int i = 0; i < 63; ++i)
            if (m.has_tau(i)) taus[i] = 2;
        for (auto [i, e] : m.xi_exps()) xis[i] = 2 * e;
        AElement part;
        detail::reduce_raw(std::move(taus), std::move(xis), s.squared(), part,
                           detail::smallest_pick);
        r += part;
    }
    return r;
}

AElement AElement::pow(int k) const {
    if (k < 0) throw std::invalid_argument("AElement::pow: negative exponent");
    AElement r = one(), base = *this;
    while (k > 0) {
        if (k & 1) r *= base;
        base = base.squared();
        k >>= 1;
    }
    return r;
}

std::string AElement::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [m, s] : terms_) {
        if (!out.empty()) out += " + ";
        bool scalar_trivial = s.is_one();
        bool scalar_sum = s.monos().size() > 1;
        std::string sc = scalar_sum ? "(" + s.str() + ")" : s.str();
        if (m.is_one()) out += scalar_trivial ? "1" : sc;
        else if (scalar_trivial) out += m.str();
        else out += sc + "*" + m.str();
    }
    return out;
}

AElement elem_add(const AElement& a, const AElement& b) { return a + b; }
AElement elem_mul(const AElement& a, const AElement& b) { return a * b; }

Bidegree bidegree_of(const AElement& a) {
    if (a.is_zero())
        throw InhomogeneousError("bidegree_of: zero element has no bidegree");
    if (auto d = a.bidegree()) return *d;
    std::set<std::string> seen;
    for (const auto& [m, s] : a.terms()) {
        Bidegree md = m.bidegree();
        for (const BaseScalar::Mono& sm : s.monos())
            seen.insert((md + sm.bidegree()).str());
    }
    std::ostringstream os;
    os << "inhomogeneous element, bidegrees:";
    for (const std::string& d : seen) os << " " << d;
    throw InhomogeneousError(os.str());
}

BaseScalar counit(const AElement& a) { return a.coefficient(GenMonomial::one()); }

AElement eta_r(const BaseScalar& c) {
    // tau -> tau + rho*tau_0, rho -> rho
    AElement eta_tau = AElement::scalar(BaseScalar::tau()) +
                       BaseScalar::rho() * AElement::tau(0);
    AElement r;
    for (const BaseScalar::Mono& m : c.monos()) {
        AElement part = eta_tau.pow(m.a);
        r += BaseScalar::monomial(0, m.b) * part;
    }
    return r;
}

} // namespace mdsa
