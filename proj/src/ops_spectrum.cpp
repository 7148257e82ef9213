#include "mdsa/ops_spectrum.hpp"

#include "mdsa/antipode.hpp"

namespace mdsa {

std::string OpsElement::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [i, s] : terms_) {
        if (!out.empty()) out += " + ";
        std::string e = std::string(suspended_ ? "S" : "") + "e[" + std::to_string(i) + "]";
        if (s.is_one()) out += e;
        else out += (s.monos().size() > 1 ? "(" + s.str() + ")" : s.str()) + "*" + e;
    }
    return out;
}

bool OpsTensor::equal_on(const OpsTensor& o, int lo, int hi, std::string* witness) const {
    if (lo < elo_ || hi > ehi_ || lo < o.elo_ || hi > o.ehi_)
        throw TruncationError("OpsTensor::equal_on: range exceeds exactness windows");
    for (int i = lo; i <= hi; ++i) {
        if (coefficient(i) == o.coefficient(i)) continue;
        if (witness) *witness = "e_" + std::to_string(i);
        return false;
    }
    return true;
}

std::string OpsTensor::str() const {
    std::string out;
    for (const auto& [i, a] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + a.str() + ")(x)e[" + std::to_string(i) + "]";
    }
    if (out.empty()) out = "0";
    return out;
}

OpsElement t_map(const BSigmaElement& x) {
    OpsElement out(true);
    for (const auto& [m, s] : x.terms()) {
        if (m.u == 0) {
            out.add_term(-2 * m.v - 1, s);
        } else {
            out.add_term(-2 * m.v - 2, s);
            out.add_term(-2 * m.v - 1, s * BaseScalar::rho());
        }
    }
    return out;
}

OpsTensor psi_l_basis(int k_index, Window jw, bool suspended) {
    bool odd = ((k_index % 2) + 2) % 2 == 1;
    int k = odd ? (k_index - 1) / 2 : k_index / 2;
    // series wide enough that [xi(t)^j]_{t^k} is exact for every j in jw
    int H = std::abs(k) + 2 * std::max(std::abs(jw.lo), std::abs(jw.hi)) + 8;
    ASeries xi = xi_series({1, H});
    ASeries tau = tau_series({1, H});

    OpsTensor out(suspended, 2 * jw.lo, 2 * jw.hi + 1);
    ASeries xij = series_int_pow(xi, jw.lo);
    for (int j = jw.lo; j <= jw.hi; ++j) {
        if (j > jw.lo) xij = xij * xi;
        if (xij.hi() < k)
            throw TruncationError("psi_l_basis: window too narrow for [xi^j]_{t^k}");
        AElement c = xij.coeff(k);
        if (odd) {
            out.add_term(2 * j + 1, c);
        } else {
            out.add_term(2 * j, c);
            AElement codd = (tau * xij).coeff(k);
            out.add_term(2 * j + 1, codd);
        }
    }
    return out;
}

OpsTensor psi_l_ops(const OpsElement& x, Window jw) {
    OpsTensor out(x.suspended(), 2 * jw.lo, 2 * jw.hi + 1);
    for (const auto& [i, s] : x.terms()) {
        OpsTensor part = psi_l_basis(i, jw, x.suspended());
        if (!s.is_one()) part = eta_r(s) * part;
        out = out + part;
    }
    return out;
}

CheckReport verify_ops_compat(int i_lo, int i_hi, int window) {
    CheckReport rep;
    rep.name = "ops_compat(i in [" + std::to_string(i_lo) + "," + std::to_string(i_hi) +
               "], window " + std::to_string(window) + ")";
    Window vw{-window, window};
    Window jw{-window, window};

    for (int i = i_lo; i <= i_hi; ++i) {
        for (int with_u = 0; with_u <= 1; ++with_u) {
            BSigmaElement x = with_u ? BSigmaElement::u() * BSigmaElement::v(i)
                                     : BSigmaElement::v(i);
            // left route: psi_L of t(x)
            OpsTensor lhs = psi_l_ops(t_map(x), jw);
            // right route: chi-switch of psi_R(x), pushed through t
            BSigmaTensor prx = psi_r_bsigma(x, vw);
            OpsTensor rhs(true, -2 * prx.vhi() - 2, -2 * prx.vlo() - 1);
            for (const auto& [m, a] : prx.terms()) {
                AElement ca = chi(a);
                OpsElement te = t_map(BSigmaElement::monomial(m));
                for (const auto& [ei, s] : te.terms())
                    rhs.add_term(ei, s * ca);
            }
            int lo = std::max(lhs.elo(), rhs.elo());
            int hi = std::min(lhs.ehi(), rhs.ehi());
            rep.count();
            if (lo > hi) {
                rep.fail("empty comparison window for x = " + x.str());
                continue;
            }
            std::string witness;
            if (!lhs.equal_on(rhs, lo, hi, &witness))
                rep.fail("psi_L(t(x)) mismatch at " + witness + " for x = " + x.str());
        }
    }
    return rep;
}

CheckReport verify_psi_l_properties(int k_lo, int k_hi, Window jw) {
    CheckReport rep;
    rep.name = "psi_l_properties(e_k, k in [" + std::to_string(k_lo) + "," +
               std::to_string(k_hi) + "])";
    for (int k = k_lo; k <= k_hi; ++k) {
        OpsTensor p = psi_l_basis(k, jw);
        // counit: (eps (x) id) psi_L(e_k) = e_k
        rep.count();
        OpsElement contracted;
        for (const auto& [i, a] : p.terms()) contracted.add_term(i, counit(a));
        if (!(contracted == OpsElement::basis(k)))
            rep.fail("counit fails on e_" + std::to_string(k));
        // bidegree bookkeeping: each coefficient (x) e_j has total bidegree |e_k|
        rep.count();
        bool ok = true;
        for (const auto& [i, a] : p.terms()) {
            auto d = a.bidegree();
            if (!d || *d + OpsElement::basis_bidegree(i, false) !=
                          OpsElement::basis_bidegree(k, false)) {
                ok = false;
                break;
            }
        }
        if (!ok) rep.fail("bidegree bookkeeping fails on e_" + std::to_string(k));
    }
    return rep;
}

} // namespace mdsa
