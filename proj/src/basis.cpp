#include "mdsa/basis.hpp"

#include <algorithm>
#include <functional>

namespace mdsa {

namespace {

// enumerate admissible monomials of exact bidegree (p, q) using generators of
// index <= max_index, appending to out
void enumerate_monomials_exact(Bidegree target, int max_index, GenMonomial cur,
                               int next_gen, std::vector<GenMonomial>& out) {
    if (target.p == 0 && target.q == 0) out.push_back(cur);
    if (target.p <= 0 || target.q < 0) return;
    // generator list: 0..max_index taus, then 1..max_index xis, indexed linearly
    int tau_count = max_index + 1;
    int total = tau_count + max_index;
    for (int g = next_gen; g < total; ++g) {
        if (g < tau_count) {
            Generator gen = tau_gen(g);
            Bidegree d = gen.bidegree();
            if (d.p > target.p) continue;
            GenMonomial m = cur;
            m.set_tau(g);
            enumerate_monomials_exact(target - d, max_index, m, g + 1, out);
        } else {
            int idx = g - tau_count + 1;
            Generator gen = xi_gen(idx);
            Bidegree d = gen.bidegree();
            for (int e = 1; e * d.p <= target.p; ++e) {
                GenMonomial m = cur;
                m.set_xi(idx, e);
                enumerate_monomials_exact({target.p - e * d.p, target.q - e * d.q},
                                          max_index, m, g + 1, out);
            }
        }
    }
}

} // namespace

std::vector<BasisVector> basis_enumerate(Bidegree d, const Caps& caps) {
    std::vector<BasisVector> out;
    for (int a = 0; a <= caps.tau_exp; ++a) {
        for (int b = 0; b <= caps.rho_exp; ++b) {
            if (a + b > caps.scalar_sum) continue;
            // tau^a rho^b has bidegree (-b, -a-b); the monomial part must have
            // bidegree d - that = (d.p + b, d.q + a + b)
            Bidegree target{d.p + b, d.q + a + b};
            if (target.p < 0 || target.q < 0) continue;
            if (target.p == 0 && target.q == 0) {
                out.push_back({{a, b}, GenMonomial::one()});
                continue;
            }
            std::vector<GenMonomial> monos;
            enumerate_monomials_exact(target, caps.max_index, GenMonomial::one(), 0, monos);
            for (const GenMonomial& m : monos) out.push_back({{a, b}, m});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GenMonomial> monomials_up_to_degree(int bound, int max_index) {
    std::vector<GenMonomial> out;
    out.push_back(GenMonomial::one());
    // DFS over generators, each tau 0/1, xi exponents bounded by degree
    std::vector<Generator> gens;
    for (int i = 0; i <= max_index; ++i)
        if (tau_gen(i).bidegree().p <= bound) gens.push_back(tau_gen(i));
    for (int i = 1; i <= max_index; ++i)
        if (xi_gen(i).bidegree().p <= bound) gens.push_back(xi_gen(i));

    std::function<void(GenMonomial, int, int)> dfs = [&](GenMonomial cur, int gi, int deg) {
        for (std::size_t g = gi; g < gens.size(); ++g) {
            const Generator& gen = gens[g];
            int gp = gen.bidegree().p;
            if (gen.is_tau) {
                if (deg + gp > bound) continue;
                GenMonomial m = cur;
                m.set_tau(gen.index);
                out.push_back(m);
                dfs(m, int(g) + 1, deg + gp);
            } else {
                GenMonomial m = cur;
                int d = deg;
                for (int e = 1; d + gp <= bound; ++e) {
                    m.set_xi(gen.index, 1);
                    d += gp;
                    out.push_back(m);
                    dfs(m, int(g) + 1, d);
                }
            }
        }
    };
    dfs(GenMonomial::one(), 0, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace mdsa
