#include "mdsa/series.hpp"

#include "mdsa/antipode.hpp"

namespace mdsa {

namespace {

ASeries gen_fun(Window w, bool is_xi, bool conjugate) {
    if (w.lo > 1 || w.hi < 1)
        throw std::invalid_argument("generating function window must contain t^1");
    ASeries f;
    for (int i = 0;; ++i) {
        long long e = 1ll << i;
        if (e > w.hi) break;
        AElement c;
        if (is_xi) c = (i == 0) ? AElement::one() : AElement::xi(i);
        else c = AElement::tau(i);
        if (conjugate) c = chi(c);
        f.add_term(int(e), 0, c);
    }
    return f.truncated(w);
}

} // namespace

ASeries xi_series(Window w) { return gen_fun(w, true, false); }
ASeries tau_series(Window w) { return gen_fun(w, false, false); }
ASeries xi_bar_series(Window w) { return gen_fun(w, true, true); }
ASeries tau_bar_series(Window w) { return gen_fun(w, false, true); }

CheckReport verify_inversion_trick(int r_lo, int r_hi, int s_lo, int s_hi, Window w) {
    CheckReport rep;
    rep.name = "inversion_trick(r in [" + std::to_string(r_lo) + "," +
               std::to_string(r_hi) + "], s in [" + std::to_string(s_lo) + "," +
               std::to_string(s_hi) + "])";
    ASeries xi = xi_series(w), tau = tau_series(w);
    ASeries xib = xi_bar_series(w), taub = tau_bar_series(w);
    for (int r = r_lo; r <= r_hi; ++r) {
        ASeries xir = series_int_pow(xi, r);
        ASeries xir_tau = xir * tau;
        for (int s = s_lo; s <= s_hi; ++s) {
            ASeries xibs = series_int_pow(xib, -s - 1);
            {
                rep.count();
                AElement lhs = xir_tau.coeff(s);
                AElement rhs = (taub * xibs).coeff(-r - 1);
                if (!(lhs == rhs))
                    rep.fail("[xi^r tau]_{t^s} != [taubar xibar^{-s-1}]_{t^{-r-1}} at r=" +
                             std::to_string(r) + " s=" + std::to_string(s));
            }
            {
                rep.count();
                AElement lhs = xir.coeff(s);
                AElement rhs = xibs.coeff(-r - 1);
                if (!(lhs == rhs))
                    rep.fail("[xi^r]_{t^s} != [xibar^{-s-1}]_{t^{-r-1}} at r=" +
                             std::to_string(r) + " s=" + std::to_string(s));
            }
        }
    }
    return rep;
}

CheckReport verify_comp_inv(Window w) {
    CheckReport rep;
    rep.name = "comp_inv(up to t^" + std::to_string(w.hi) + ")";
    ASeries xi = xi_series(w), tau = tau_series(w);
    ASeries xib = xi_bar_series(w), taub = tau_bar_series(w);

    std::string witness;
    rep.count();
    ASeries a = series_compose(xi, xib);
    Window cmp{1, std::min(a.hi(), w.hi)};
    if (!series_equal_on(a, ASeries::t_power(1), cmp, &witness))
        rep.fail("xi(xibar(t)) != t at " + witness);

    rep.count();
    ASeries b = series_compose(xib, xi);
    cmp = {1, std::min(b.hi(), w.hi)};
    if (!series_equal_on(b, ASeries::t_power(1), cmp, &witness))
        rep.fail("xibar(xi(t)) != t at " + witness);

    rep.count();
    ASeries c = series_compose(tau, xib);
    cmp = {1, std::min(c.hi(), w.hi)};
    if (!series_equal_on(c, taub.truncated(cmp), cmp, &witness))
        rep.fail("tau(xibar(t)) != taubar(t) at " + witness);

    rep.count();
    ASeries d = series_compose(taub, xi);
    cmp = {1, std::min(d.hi(), w.hi)};
    if (!series_equal_on(d, tau.truncated(cmp), cmp, &witness))
        rep.fail("taubar(xi(t)) != tau(t) at " + witness);

    return rep;
}

} // namespace mdsa
