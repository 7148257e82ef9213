#pragma once

#include "mdsa/element.hpp"

namespace mdsa {

// Antipode values on single generators, memoized:
//   chi(xi_r)  = xi_r  + sum_{i=1}^{r-1} xi_{r-i}^{2^i} chi(xi_i)
//   chi(tau_r) = tau_r + sum_{i=0}^{r-1} xi_{r-i}^{2^i} chi(tau_i)
AElement chi_generator(const Generator& g);

// Antipode on A**: multiplicative, chi(tau) = tau + rho*tau_0, chi(rho) = rho.
AElement chi(const AElement& a);

// Memo table maintenance (shared with the persistent cache layer).
namespace chi_cache {
void clear();
std::size_t size();
// snapshot/restore for persistence: generator name -> value
std::map<std::string, AElement> snapshot();
void restore(const std::map<std::string, AElement>& entries);
} // namespace chi_cache

} // namespace mdsa
