#include "mdsa/tensor.hpp"

#include <mutex>

namespace mdsa {

void TensorElement::add_term(const BaseScalar& s, const AElement& left,
                             const AElement& right) {
    for (const auto& [mr, sr] : right.terms()) {
        // pass the right-factor scalar left through eta_r
        AElement lhs = sr.is_one() ? left : left * eta_r(sr);
        for (const auto& [ml, sl] : lhs.terms())
            add_monomial_term(ml, mr, s * sl);
    }
}

TensorElement tensor_normalize(const BaseScalar& s, const AElement& left,
                               const AElement& right) {
    TensorElement t;
    t.add_term(s, left, right);
    return t;
}

TensorElement operator*(const TensorElement& x, const TensorElement& y) {
    TensorElement r;
    for (const auto& [ka, sa] : x.terms()) {
        for (const auto& [kb, sb] : y.terms()) {
            AElement left = detail::mul_monomials(ka.first, kb.first, nullptr);
            AElement right = detail::mul_monomials(ka.second, kb.second, nullptr);
            r.add_term(sa * sb, left, right);
        }
    }
    return r;
}

TensorElement TensorElement::squared() const {
    TensorElement r;
    for (const auto& [k, s] : terms_) {
        AElement left = AElement::monomial(k.first).squared();
        AElement right = AElement::monomial(k.second).squared();
        r.add_term(s.squared(), left, right);
    }
    return r;
}

TensorElement TensorElement::pow(int k) const {
    if (k < 0) throw std::invalid_argument("TensorElement::pow: negative exponent");
    TensorElement r = unit(), base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base.squared();
        k >>= 1;
    }
    return r;
}

std::string TensorElement::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [k, s] : terms_) {
        if (!out.empty()) out += " + ";
        if (!s.is_one()) out += (s.monos().size() > 1 ? "(" + s.str() + ")" : s.str()) + "*";
        out += k.first.str() + "(x)" + k.second.str();
    }
    return out;
}

void TripleTensor::add_term(const BaseScalar& s, const AElement& a,
                            const AElement& b, const AElement& c) {
    for (const auto& [mc, sc] : c.terms()) {
        AElement mid = sc.is_one() ? b : b * eta_r(sc);
        for (const auto& [mb, sb] : mid.terms()) {
            AElement lhs = sb.is_one() ? a : a * eta_r(sb);
            for (const auto& [ma, sa] : lhs.terms())
                add_monomial_term({ma, mb, mc}, s * sa);
        }
    }
}

TensorElement psi_generator(const Generator& g) {
    TensorElement t;
    int r = g.index;
    if (g.is_tau) {
        // psi(tau_r) = tau_r(x)1 + 1(x)tau_r + sum_{i=0}^{r-1} xi_{r-i}^{2^i}(x)tau_i
        t += TensorElement::term(GenMonomial::tau(r), GenMonomial::one());
        t += TensorElement::term(GenMonomial::one(), GenMonomial::tau(r));
        for (int i = 0; i < r; ++i)
            t += TensorElement::term(GenMonomial::xi(r - i, 1 << i), GenMonomial::tau(i));
    } else {
        // psi(xi_r) = sum_{i=0}^{r} xi_{r-i}^{2^i}(x)xi_i with xi_0 = 1
        for (int i = 0; i <= r; ++i) {
            GenMonomial l = (i == r) ? GenMonomial::one() : GenMonomial::xi(r - i, 1 << i);
            GenMonomial rt = (i == 0) ? GenMonomial::one() : GenMonomial::xi(i);
            t += TensorElement::term(l, rt);
        }
    }
    return t;
}

namespace {

std::mutex psi_mutex;
std::map<GenMonomial, TensorElement> psi_memo;

TensorElement psi_monomial(const GenMonomial& m, const GenCoproduct& gen_psi,
                           bool allow_memo) {
    if (m.is_one()) return TensorElement::unit();
    if (allow_memo) {
        std::lock_guard<std::mutex> lk(psi_mutex);
        auto it = psi_memo.find(m);
        if (it != psi_memo.end()) return it->second;
    }
    // split off highest xi power block (or a tau) and recurse
    std::vector<Generator> fs = m.factors();
    TensorElement result;
    if (fs.size() == 1) {
        result = gen_psi(fs[0]);
    } else {
        // peel one factor; use binary powering for large xi exponents
        const auto& xs = m.xi_exps();
        if (!xs.empty() && xs.back().second > 1) {
            auto [idx, exp] = xs.back();
            // rest of the monomial without this xi block
            GenMonomial r2;
            for (int i = 0; i < 63; ++i)
                if (m.has_tau(i)) r2.set_tau(i);
            for (auto [i, e] : xs)
                if (i != idx) r2.set_xi(i, e);
            TensorElement p = psi_monomial(GenMonomial::xi(idx), gen_psi, allow_memo).pow(exp);
            result = p * psi_monomial(r2, gen_psi, allow_memo);
        } else {
            Generator g = fs[0];
            GenMonomial rest;
            for (int i = 0; i < 63; ++i)
                if (m.has_tau(i) && !(g.is_tau && g.index == i)) rest.set_tau(i);
            for (auto [i, e] : xs) {
                int e2 = e - ((!g.is_tau && g.index == i) ? 1 : 0);
                if (e2 > 0) rest.set_xi(i, e2);
            }
            result = gen_psi(g) * psi_monomial(rest, gen_psi, allow_memo);
        }
    }
    if (allow_memo) {
        std::lock_guard<std::mutex> lk(psi_mutex);
        psi_memo.emplace(m, result);
    }
    return result;
}

} // namespace

TensorElement psi(const AElement& a, const GenCoproduct& gen_psi) {
    // only memoize the default coproduct
    bool standard = !gen_psi;
    GenCoproduct f = gen_psi ? gen_psi : psi_generator;
    TensorElement r;
    for (const auto& [m, s] : a.terms())
        r += s * psi_monomial(m, f, standard);
    return r;
}

TensorElement psi(const AElement& a) { return psi(a, nullptr); }

TripleTensor psi_left_slot(const TensorElement& t, const GenCoproduct& gen_psi) {
    GenCoproduct f = gen_psi ? gen_psi : psi_generator;
    TripleTensor out;
    for (const auto& [k, s] : t.terms()) {
        TensorElement pl = psi_monomial(k.first, f, !gen_psi);
        // scalars of pl sit in its left slot = global slot 1
        for (const auto& [pk, ps] : pl.terms())
            out.add_monomial_term({pk.first, pk.second, k.second}, s * ps);
    }
    return out;
}

TripleTensor psi_right_slot(const TensorElement& t, const GenCoproduct& gen_psi) {
    GenCoproduct f = gen_psi ? gen_psi : psi_generator;
    TripleTensor out;
    for (const auto& [k, s] : t.terms()) {
        TensorElement pr = psi_monomial(k.second, f, !gen_psi);
        // scalars of pr sit in global slot 2: pass left via eta_r
        for (const auto& [pk, ps] : pr.terms()) {
            AElement slot1 = ps.is_one() ? AElement::monomial(k.first)
                                         : AElement::monomial(k.first) * eta_r(ps);
            for (const auto& [m1, s1] : slot1.terms())
                out.add_monomial_term({m1, pk.first, pk.second}, s * s1);
        }
    }
    return out;
}

AElement contract_left_counit(const TensorElement& t) {
    AElement r;
    for (const auto& [k, s] : t.terms())
        if (k.first.is_one()) r.add_term(k.second, s);
    return r;
}

AElement contract_right_counit(const TensorElement& t) {
    AElement r;
    for (const auto& [k, s] : t.terms())
        if (k.second.is_one()) r.add_term(k.first, s);
    return r;
}

} // namespace mdsa
