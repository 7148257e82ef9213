#pragma once

#include <compare>
#include <string>

namespace mdsa {

// Bidegree (p, q) = (topological degree, motivic weight), homological
// convention throughout.
struct Bidegree {
    int p = 0;
    int q = 0;

    friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.p + b.p, a.q + b.q}; }
    friend Bidegree operator-(Bidegree a, Bidegree b) { return {a.p - b.p, a.q - b.q}; }
    Bidegree& operator+=(Bidegree o) { p += o.p; q += o.q; return *this; }
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;

    std::string str() const {
        return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
};

// ceil(i/2) for all signs; the weight shift of Q^i.
inline int ceil_half(int i) { return (i >= 0) ? (i + 1) / 2 : -((-i) / 2); }

inline Bidegree q_shift(int i) { return {i, ceil_half(i)}; }

} // namespace mdsa
