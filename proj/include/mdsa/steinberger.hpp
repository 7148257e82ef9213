#pragma once

#include <set>

#include "mdsa/basis.hpp"
#include "mdsa/power_ops.hpp"

namespace mdsa {

// Q^{2(2^i-1)}(tau_0) + tau_i + sum_{k=0}^{i-1} tau_k Q^{2(2^i-2^k-1)+1}(tau_0) = 0
// for i = 1..i_max (i = 0 is degenerate and skipped with a note)
CheckReport verify_tau_relation(int i_max);

// xi_i = Q^{-1}(tau_i) + Q^{2^i-1}(tau_{i-1}) for i = 1..i_max, plus the
// v-coefficient base case Q^{-1}(tau_0) = 0
CheckReport verify_xi_identity(int i_max);

struct ClosureCaps {
    int max_degree = 15;    // topological degree bound for reached elements
    int max_gen_index = 4;  // generator index bound (enumeration and targets)
    int scalar_cap = 8;     // a+b bound on tau^a rho^b multipliers
    int q_lo = -4;          // sweep range of operation indices
    int q_hi = 24;
    int product_rounds = 2; // rounds of pairwise products
    int constructive_k = 4; // prioritized indices 2^{k+1}-2, 2^{k+1}-3, k <= this
};

enum class ReachStatus { reachable, not_in_span_within_caps, undecided };

struct TargetReport {
    std::string name;
    AElement target;
    ReachStatus status = ReachStatus::undecided;
    std::string witness; // explicit M-linear combination when reachable
};

struct ClosureResult {
    std::vector<AElement> reached; // canonicalized, in insertion order
    std::vector<TargetReport> targets;
    CheckReport report;
};

// Saturates {seed} under power operations and pairwise products within caps,
// then decides, per target, membership in the M-span of the reached set by
// F2 linear algebra per bidegree over the basis_enumerate basis. Reachable
// verdicts carry a witness combination that re-evaluates to the target.
ClosureResult closure_generate(const AElement& seed, const ClosureCaps& caps,
                               const std::vector<std::pair<std::string, AElement>>& targets);

// default target list tau_i, xi_i for i <= index_cap
std::vector<std::pair<std::string, AElement>> generator_targets(int index_cap);

} // namespace mdsa
