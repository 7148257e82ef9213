#include <doctest.h>

#include "mdsa/power_ops.hpp"

using namespace mdsa;

namespace {
const BaseScalar tau_s = BaseScalar::tau();
const BaseScalar rho_s = BaseScalar::rho();
using BS = BSigmaElement;
} // namespace

TEST_CASE("bs_mul and the u^2 relation") {
    CHECK(BS::u() * BS::u() == tau_s * BS::v() + rho_s * BS::u());
    CHECK(BS::v() * BS::v(-1) == BS::one());
    // u * uv = tau v^2 + rho u v
    CHECK(BS::u() * (BS::u() * BS::v()) ==
          tau_s * BS::v(2) + rho_s * (BS::u() * BS::v()));
}

TEST_CASE("bsigma bidegrees") {
    CHECK(BS::u().bidegree() == Bidegree{-1, -1});
    CHECK(BS::v().bidegree() == Bidegree{-2, -1});
    CHECK((BS::u() * BS::u()).bidegree() == Bidegree{-2, -2});
}

TEST_CASE("psi_r on generators") {
    Window vw{0, 16};
    BSigmaTensor pu = psi_r_bsigma(BS::u(), vw);
    CHECK(pu.coefficient({1, 0}) == AElement::one());
    CHECK(pu.coefficient({0, 1}) == AElement::tau(0));
    CHECK(pu.coefficient({0, 2}) == AElement::tau(1));
    CHECK(pu.coefficient({0, 4}) == AElement::tau(2));
    CHECK(pu.coefficient({0, 3}).is_zero());

    BSigmaTensor pv = psi_r_bsigma(BS::v(), vw);
    CHECK(pv.coefficient({0, 1}) == AElement::one());
    CHECK(pv.coefficient({0, 2}) == AElement::xi(1));
    CHECK(pv.coefficient({0, 4}) == AElement::xi(2));

    CHECK(psi_r_bsigma(BS::one(), vw) == BSigmaTensor::one());
}

TEST_CASE("psi_r of v^{-1} matches the xi(t)^{-1} series") {
    Window vw{-4, 12};
    BSigmaTensor p = psi_r_bsigma(BS::v(-1), vw);
    CHECK(p.coefficient({0, -1}) == AElement::one());
    // [xi(t)^{-1}]_{t^0} = xi_1: same quantity as the e_{-1} coefficient of
    // psi_L(e_1); the series oracle fixes this value
    CHECK(p.coefficient({0, 0}) == AElement::xi(1));
    CHECK(p.coefficient({0, 1}) == AElement::xi(1, 2));
}

TEST_CASE("psi_r is a ring map, including the tau_i^2 derivation") {
    CheckReport rep = verify_psi_r_ring_map(20, 777u, {0, 24});
    INFO(rep.summary());
    CHECK(rep.passed());
}

TEST_CASE("psi_r Frobenius compatibility for v-powers") {
    Window vw{0, 32};
    BSigmaTensor pv = psi_r_bsigma(BS::v(), vw);
    for (int i = 1; i <= 3; ++i) {
        BSigmaTensor lhs = psi_r_bsigma(BS::v(1 << i), vw);
        BSigmaTensor rhs = pv;
        for (int k = 0; k < i; ++k) rhs = rhs * rhs;
        Window cmp{0, std::min(lhs.vhi(), rhs.vhi())};
        CHECK(lhs.truncated(cmp) == rhs.truncated(cmp));
    }
}

TEST_CASE("q table on u and v powers") {
    CHECK(q_on_bsigma(-1, BS::u()) == BS::v());
    CHECK(q_on_bsigma(0, BS::u()) == BS::u());
    CHECK(q_on_bsigma(2, BS::u()).is_zero());
    CHECK(q_on_bsigma(-2, BS::v()) == BS::v(2));
    CHECK(q_on_bsigma(0, BS::v()) == BS::v());
    CHECK(q_on_bsigma(-1, BS::v()).is_zero());
    CHECK(q_on_bsigma(-4, BS::v(2)) == BS::v(4));
    // Q^0(uv) = uv; odd-odd corrections vanish on v-powers
    CHECK(q_on_bsigma(0, BS::u() * BS::v()) == BS::u() * BS::v());
    // Q^{-1}(uv) = Q^{-1}(u) v = v^2
    CHECK(q_on_bsigma(-1, BS::u() * BS::v()) == BS::v(2));
}

TEST_CASE("q on general v exponents via binary cartan") {
    // v^3 = v * v^2: Q^{-2}(v^3) = Q^{-2}(v) v^2 + ... table/cartan value
    BSigmaElement got = q_on_bsigma(-2, BS::v(3));
    // full Cartan: Q^{-2}(v)Q^0(v^2) + Q^0(v)Q^{-2}(v^2)(=0 at -2 on v^2? the
    // only even supports are 0 and -4) => v^2 * v^2 = v^4
    CHECK(got == BS::v(4));
    // additivity and squaring: |v^m| = (-2m,-m): squaring index -2m
    for (int m = 1; m <= 6; ++m)
        CHECK(q_on_bsigma(-2 * m, BS::v(m)) == BS::v(2 * m));
}

TEST_CASE("cartan v rule check") {
    CheckReport rep = cartan_v_rule_check(-6, 6, 3);
    INFO(rep.summary());
    CHECK(rep.passed());
}

TEST_CASE("q_on_bsigma rejects non-polynomial and non-F2 input") {
    CHECK_THROWS_AS(q_on_bsigma(0, BS::v(-1)), std::invalid_argument);
    CHECK_THROWS_AS(q_on_bsigma(0, tau_s * BS::u()), std::invalid_argument);
}

TEST_CASE("psi_r window too small to contain any term") {
    CHECK_THROWS_AS(psi_r_bsigma(BS::v(5), {0, 3}), EmptyWindowError);
}

TEST_CASE("bsigma json schema round trip") {
    // handled through json_io in the CLI tests; pin the term layout here
    BSigmaElement e = BS::u() * BS::v() + tau_s * BS::v(2);
    CHECK(e.coefficient({1, 1}).is_one());
    CHECK(e.coefficient({0, 2}) == tau_s);
}
