#include "mdsa/hopf_check.hpp"

namespace mdsa {

namespace {

// largest generator index that can appear in degree <= bound
int index_span(int bound) {
    int i = 0;
    while (tau_gen(i + 1).bidegree().p <= bound || xi_gen(i + 1).bidegree().p <= bound)
        ++i;
    return i;
}

AElement mul_contract_chi(const TensorElement& t) {
    // m (id (x) chi)
    AElement r;
    for (const auto& [k, s] : t.terms())
        r += s * (AElement::monomial(k.first) * chi(AElement::monomial(k.second)));
    return r;
}

} // namespace

CheckReport verify_hopf_axioms(int degree_bound, int max_index,
                               const GenCoproduct& gen_psi) {
    CheckReport rep;
    rep.name = "hopf_axioms(deg<=" + std::to_string(degree_bound) + ")";
    if (max_index < 0) max_index = index_span(degree_bound);

    for (const GenMonomial& m : monomials_up_to_degree(degree_bound, max_index)) {
        AElement e = AElement::monomial(m);
        TensorElement p = psi(e, gen_psi);

        rep.count();
        if (psi_left_slot(p, gen_psi) != psi_right_slot(p, gen_psi))
            rep.fail("coassociativity fails on " + m.str());

        rep.count();
        if (contract_left_counit(p) != e)
            rep.fail("left counit fails on " + m.str());

        rep.count();
        if (contract_right_counit(p) != e)
            rep.fail("right counit fails on " + m.str());

        rep.count();
        AElement anti = mul_contract_chi(p);
        if (anti != AElement::scalar(counit(e)))
            rep.fail("antipode identity fails on " + m.str() + ", got " + anti.str());

        rep.count();
        if (chi(chi(e)) != e)
            rep.fail("chi^2 != id on " + m.str());
    }
    return rep;
}

CheckReport verify_relation_consistency(int i_max) {
    CheckReport rep;
    rep.name = "relation_consistency(i<=" + std::to_string(i_max) + ")";
    for (int i = 0; i <= i_max; ++i) {
        rep.count();
        AElement ti = AElement::tau(i);
        TensorElement lhs = psi(ti).squared();
        TensorElement rhs = psi(ti * ti);
        if (lhs != rhs)
            rep.fail("psi(tau_" + std::to_string(i) + ")^2 != psi(tau_" +
                     std::to_string(i) + "^2)");
    }
    return rep;
}

} // namespace mdsa
