#pragma once

#include "mdsa/antipode.hpp"
#include "mdsa/basis.hpp"
#include "mdsa/report.hpp"
#include "mdsa/tensor.hpp"

namespace mdsa {

// Checks, for every admissible monomial of topological degree <= bound:
//   coassociativity   (psi (x) id) psi = (id (x) psi) psi
//   left counit       (eps (x) id) psi = id
//   right counit      (id (x) eps) psi = id
//   antipode          m (id (x) chi) psi = eta_L eps
//   involution        chi(chi(x)) = x
// gen_psi overrides the generator coproduct (fault-injection hook).
CheckReport verify_hopf_axioms(int degree_bound, int max_index = -1,
                               const GenCoproduct& gen_psi = nullptr);

// psi(tau_i)^2 = psi(tau_i^2 rewritten), in the normalized tensor
CheckReport verify_relation_consistency(int i_max);

} // namespace mdsa
