#include <doctest.h>

#include "mdsa/antipode.hpp"
#include "mdsa/json_io.hpp"
#include "mdsa/steinberger.hpp"

using namespace mdsa;

TEST_CASE("tau relation residuals vanish") {
    // i = 1 by hand: Q^2(tau_0) + tau_1 + tau_0 Q^1(tau_0)
    AElement residual = q_generator(2, tau_gen(0)) + AElement::tau(1) +
                        AElement::tau(0) * q_generator(1, tau_gen(0));
    CHECK(residual.is_zero());

    CheckReport rep = verify_tau_relation(3);
    INFO(rep.summary());
    CHECK(rep.passed());
}

TEST_CASE("xi identity") {
    // i = 1: Q^{-1}(tau_1) + Q^1(tau_0) = 0 + xi_1
    CHECK(q_generator(-1, tau_gen(1)).is_zero());
    CHECK(q_generator(1, tau_gen(0)) == AElement::xi(1));

    CheckReport rep = verify_xi_identity(3);
    INFO(rep.summary());
    CHECK(rep.passed());
}

TEST_CASE("closure from tau_0 reaches the low generators") {
    ClosureCaps caps;
    caps.max_degree = 8;
    caps.max_gen_index = 3;
    caps.q_lo = -2;
    caps.q_hi = 8;
    caps.constructive_k = 2;
    ClosureResult res = closure_generate(AElement::tau(0), caps, generator_targets(2));
    INFO(res.report.summary());
    for (const TargetReport& t : res.targets) {
        INFO(t.name, " status ", int(t.status), " witness: ", t.witness);
        CHECK(t.status == ReachStatus::reachable);
    }
}

TEST_CASE("closure reaches conjugates at step one") {
    ClosureCaps caps;
    caps.max_degree = 32;
    caps.q_lo = 0;
    caps.q_hi = 0;
    caps.product_rounds = 0;
    caps.constructive_k = 4;
    ClosureResult res = closure_generate(AElement::tau(0), caps, {});
    for (int k = 1; k <= 4; ++k) {
        AElement conj_tau = chi(AElement::tau(k));
        AElement conj_xi = chi(AElement::xi(k));
        bool found_tau = false, found_xi = false;
        for (const AElement& e : res.reached) {
            if (e == conj_tau) found_tau = true;
            if (e == conj_xi) found_xi = true;
        }
        if (conj_tau.bidegree()->p <= caps.max_degree) CHECK(found_tau);
        if (conj_xi.bidegree()->p <= caps.max_degree) CHECK(found_xi);
    }
}

TEST_CASE("closure of zero and of xi_1") {
    ClosureCaps caps;
    caps.max_degree = 6;
    caps.max_gen_index = 2;
    caps.q_lo = -2;
    caps.q_hi = 6;
    caps.constructive_k = 1;

    ClosureResult zero = closure_generate(AElement::zero(), caps,
                                          {{"T0", AElement::tau(0)}});
    CHECK(zero.reached.empty());
    CHECK(zero.targets[0].status != ReachStatus::reachable);

    // weight/parity obstruction: tau_0 is not in the capped closure of xi_1;
    // recorded as the observed outcome of the bounded search
    ClosureResult fromxi = closure_generate(AElement::xi(1), caps,
                                            {{"T0", AElement::tau(0)}});
    CHECK(fromxi.targets[0].status != ReachStatus::reachable);
}

TEST_CASE("witnesses re-evaluate to their targets") {
    ClosureCaps caps;
    caps.max_degree = 8;
    caps.max_gen_index = 3;
    caps.q_lo = -2;
    caps.q_hi = 8;
    caps.constructive_k = 2;
    ClosureResult res = closure_generate(AElement::tau(0), caps, generator_targets(2));
    // soundness is asserted inside closure_generate; a reachable status means
    // the recorded combination re-evaluated to the target
    CHECK(res.report.passed());
    for (const TargetReport& t : res.targets) {
        CHECK(t.status == ReachStatus::reachable);
        CHECK(!t.witness.empty());
    }

    json j = to_json(res, caps);
    CHECK(j.at("targets").size() == res.targets.size());
    CHECK(j.at("caps").at("max_degree").get<int>() == 8);
    for (const auto& t : j.at("targets"))
        CHECK(t.at("status").get<std::string>() == "reachable");
}
