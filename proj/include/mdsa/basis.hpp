#pragma once

#include <vector>

#include "mdsa/element.hpp"

namespace mdsa {

// Bounds for basis enumeration and closure searches.
struct Caps {
    int tau_exp = 8;  // max a in tau^a
    int rho_exp = 8;  // max b in rho^b
    int scalar_sum = 8; // max a+b
    int max_index = 4;  // max generator index
};

// One F2-basis vector of the bidegree-d slice: tau^a rho^b * (tau^E xi^R).
struct BasisVector {
    BaseScalar::Mono scalar; // (a, b)
    GenMonomial mono;

    AElement element() const {
        return BaseScalar::monomial(scalar.a, scalar.b) * AElement::monomial(mono);
    }
    friend auto operator<=>(const BasisVector&, const BasisVector&) = default;
};

// All basis elements of exact bidegree d within caps, each exactly once.
std::vector<BasisVector> basis_enumerate(Bidegree d, const Caps& caps);

// All admissible monomials tau^E xi^R (no scalar part) of topological degree
// <= bound, generator index <= max_index.
std::vector<GenMonomial> monomials_up_to_degree(int bound, int max_index);

} // namespace mdsa
