#include <doctest.h>

#include "mdsa/ops_spectrum.hpp"

using namespace mdsa;

namespace {
const BaseScalar rho_s = BaseScalar::rho();
using BS = BSigmaElement;
} // namespace

TEST_CASE("basis bidegrees") {
    CHECK(OpsElement::basis_bidegree(0, false) == Bidegree{0, 0});
    CHECK(OpsElement::basis_bidegree(4, false) == Bidegree{4, 2});
    CHECK(OpsElement::basis_bidegree(5, false) == Bidegree{5, 3});
    CHECK(OpsElement::basis_bidegree(-1, false) == Bidegree{-1, 0});
    CHECK(OpsElement::basis_bidegree(-2, false) == Bidegree{-2, -1});
    CHECK(OpsElement::basis_bidegree(-3, false) == Bidegree{-3, -1});
    CHECK(OpsElement::basis_bidegree(1, true) == Bidegree{2, 1});
}

TEST_CASE("t_map values") {
    // t(v^{-1}) = Sigma e_1
    OpsElement t1 = t_map(BS::v(-1));
    CHECK(t1.suspended());
    CHECK(t1 == OpsElement::basis(1, true));

    // t(u) = Sigma e_{-2} + rho Sigma e_{-1}
    OpsElement tu = t_map(BS::u());
    OpsElement expect = OpsElement::basis(-2, true) + rho_s * OpsElement::basis(-1, true);
    CHECK(tu == expect);

    CHECK(t_map(BS::zero()).is_zero());

    // t is M-linear and t(u v^i) - rho t(v^i) = Sigma e_{-2i-2}
    for (int i = -3; i <= 3; ++i) {
        OpsElement diff = t_map(BS::u() * BS::v(i)) + rho_s * t_map(BS::v(i));
        CHECK(diff == OpsElement::basis(-2 * i - 2, true));
    }

    // bidegree bookkeeping: |t(x)| = |x| for homogeneous x
    for (int i = -2; i <= 2; ++i) {
        CHECK(*t_map(BS::v(i)).bidegree() == *BS::v(i).bidegree());
        CHECK(*t_map(BS::u() * BS::v(i)).bidegree() == *(BS::u() * BS::v(i)).bidegree());
    }
}

TEST_CASE("psi_l on basis classes") {
    Window jw{-8, 8};
    // psi_L(e_1): 1 (x) e_1 + xi_1 (x) e_{-1} + xi_1^2 (x) e_{-3} + ...
    OpsTensor p1 = psi_l_basis(1, jw);
    CHECK(p1.coefficient(1) == AElement::one());
    CHECK(p1.coefficient(-1) == AElement::xi(1));
    CHECK(p1.coefficient(-3) == AElement::xi(1, 2));
    CHECK(p1.coefficient(3).is_zero());

    // leading term of psi_L(e_{2k+1}) is 1 (x) e_{2k+1}
    for (int k = -2; k <= 2; ++k)
        CHECK(psi_l_basis(2 * k + 1, jw).coefficient(2 * k + 1) == AElement::one());

    // psi_L(e_0): e_1 coefficient [tau(t)]_{t^0} = 0, e_{-1} coefficient
    // [tau(t) xi(t)^{-1}]_{t^0} = tau_0
    OpsTensor p0 = psi_l_basis(0, jw);
    CHECK(p0.coefficient(1).is_zero());
    CHECK(p0.coefficient(-1) == AElement::tau(0));
    CHECK(p0.coefficient(0) == AElement::one());
}

TEST_CASE("psi_l counit and bidegree properties") {
    CheckReport rep = verify_psi_l_properties(-5, 5, {-8, 8});
    INFO(rep.summary());
    CHECK(rep.passed());
}

TEST_CASE("ops compatibility: psi_L o t vs chi-switched psi_R") {
    CheckReport rep = verify_ops_compat(-4, 4, 10);
    INFO(rep.summary());
    CHECK(rep.passed());
}

TEST_CASE("coefficient outside the declared window errors") {
    OpsTensor p = psi_l_basis(1, {-3, 3});
    CHECK_THROWS_AS((void)p.coefficient(9), TruncationError);
}
