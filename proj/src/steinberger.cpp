#include "mdsa/steinberger.hpp"

#include <algorithm>
#include <bit>

namespace mdsa {

CheckReport verify_tau_relation(int i_max) {
    CheckReport rep;
    rep.name = "tau_relation(i<=" + std::to_string(i_max) + ")";
    rep.note("i = 0 skipped: the relation degenerates to the empty-sum case");
    for (int i = 1; i <= i_max; ++i) {
        rep.count();
        AElement residual = q_generator(2 * ((1 << i) - 1), tau_gen(0)) + AElement::tau(i);
        for (int k = 0; k < i; ++k)
            residual += AElement::tau(k) *
                        q_generator(2 * ((1 << i) - (1 << k) - 1) + 1, tau_gen(0));
        if (!residual.is_zero())
            rep.fail("nonzero residual at i=" + std::to_string(i) + ": " + residual.str());
    }
    return rep;
}

CheckReport verify_xi_identity(int i_max) {
    CheckReport rep;
    rep.name = "xi_identity(i<=" + std::to_string(i_max) + ")";
    // base case: the v-coefficient reads 1 = 1 + Q^{-1}(tau_0)
    rep.count();
    if (!q_generator(-1, tau_gen(0)).is_zero())
        rep.fail("base case: Q^{-1}(tau_0) != 0");
    for (int i = 1; i <= i_max; ++i) {
        rep.count();
        AElement rhs = q_generator(-1, tau_gen(i)) +
                       q_generator((1 << i) - 1, tau_gen(i - 1));
        if (!(rhs == AElement::xi(i)))
            rep.fail("xi_" + std::to_string(i) + " != Q^{-1}(tau_" + std::to_string(i) +
                     ") + Q^{2^i-1}(tau_" + std::to_string(i - 1) + ")");
    }
    return rep;
}

std::vector<std::pair<std::string, AElement>> generator_targets(int index_cap) {
    std::vector<std::pair<std::string, AElement>> ts;
    for (int i = 1; i <= index_cap; ++i) {
        ts.push_back({"T" + std::to_string(i), AElement::tau(i)});
        ts.push_back({"X" + std::to_string(i), AElement::xi(i)});
    }
    return ts;
}

namespace {

// GF(2) row with provenance for witness extraction
struct Gf2Row {
    std::vector<std::uint64_t> bits;
    std::vector<std::pair<BaseScalar, std::size_t>> combo; // scalar * reached[idx]

    int pivot() const {
        for (std::size_t b = 0; b < bits.size(); ++b) {
            if (!bits[b]) continue;
            return int(b * 64 + std::size_t(std::countr_zero(bits[b])));
        }
        return -1;
    }
    void add(const Gf2Row& o) {
        for (std::size_t b = 0; b < bits.size(); ++b) bits[b] ^= o.bits[b];
        combo.insert(combo.end(), o.combo.begin(), o.combo.end());
    }
};

} // namespace

ClosureResult closure_generate(const AElement& seed, const ClosureCaps& caps,
                               const std::vector<std::pair<std::string, AElement>>& targets) {
    ClosureResult res;
    res.report.name = "closure(deg<=" + std::to_string(caps.max_degree) + ")";

    std::set<AElement> seen;
    auto admit = [&](const AElement& e) -> bool {
        if (e.is_zero()) return false;
        auto d = e.bidegree();
        if (!d || d->p > caps.max_degree) return false;
        if (!seen.insert(e).second) return false;
        res.reached.push_back(e);
        return true;
    };

    if (!seed.is_zero()) admit(seed);

    // operation indices: the constructive ones from the generation proofs
    // first, then a plain sweep
    std::vector<int> indices;
    for (int k = 1; k <= caps.constructive_k; ++k) {
        indices.push_back((1 << (k + 1)) - 2);
        indices.push_back((1 << (k + 1)) - 3);
        indices.push_back(2 * ((1 << k) - 1));
        for (int j = 0; j < k; ++j)
            indices.push_back(2 * ((1 << k) - (1 << j) - 1) + 1);
    }
    for (int i = caps.q_lo; i <= caps.q_hi; ++i) indices.push_back(i);

    // saturate under Q on F2-pure elements
    std::size_t q_from = 0;
    for (int round = 0; round < 2; ++round) {
        std::size_t upto = res.reached.size();
        for (std::size_t k = q_from; k < upto; ++k) {
            AElement x = res.reached[k];
            if (!x.f2_coefficients()) continue;
            for (int i : indices) {
                AElement qx = q_element(i, x);
                if (!qx.is_zero() && qx.f2_coefficients()) admit(qx);
            }
        }
        q_from = upto;
    }

    // pairwise products
    for (int round = 0; round < caps.product_rounds; ++round) {
        std::size_t upto = res.reached.size();
        for (std::size_t a = 0; a < upto; ++a)
            for (std::size_t b = a; b < upto; ++b)
                admit(res.reached[a] * res.reached[b]);
    }

    // membership per target: F2 linear algebra in the target's bidegree slice
    Caps bcaps{caps.scalar_cap, caps.scalar_cap, caps.scalar_cap, caps.max_gen_index};
    for (const auto& [name, target] : targets) {
        TargetReport tr;
        tr.name = name;
        tr.target = target;
        res.report.count();

        auto dopt = target.bidegree();
        if (!dopt || target.is_zero()) {
            tr.status = ReachStatus::undecided;
            tr.witness = "target not homogeneous";
            res.targets.push_back(tr);
            continue;
        }
        Bidegree d = *dopt;

        std::vector<BasisVector> basis = basis_enumerate(d, bcaps);
        std::map<BasisVector, int> index;
        for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = int(i);
        std::size_t blocks = (basis.size() + 63) / 64;

        bool overflow = false;
        auto to_row = [&](const AElement& e) -> std::optional<Gf2Row> {
            Gf2Row row;
            row.bits.assign(blocks, 0);
            for (const auto& [m, s] : e.terms()) {
                for (const BaseScalar::Mono& sm : s.monos()) {
                    auto it = index.find(BasisVector{sm, m});
                    if (it == index.end()) return std::nullopt;
                    row.bits[std::size_t(it->second) / 64] ^=
                        (std::uint64_t(1) << (std::size_t(it->second) % 64));
                }
            }
            return row;
        };

        std::vector<Gf2Row> rows;
        for (std::size_t k = 0; k < res.reached.size(); ++k) {
            const AElement& x = res.reached[k];
            Bidegree dx = *x.bidegree();
            // tau^a rho^b * x lands in bidegree d iff b = dx.p - d.p and
            // a = (dx.q - d.q) - b
            int b = dx.p - d.p;
            int a = (dx.q - d.q) - b;
            if (a < 0 || b < 0 || a + b > caps.scalar_cap) continue;
            BaseScalar s = BaseScalar::monomial(a, b);
            auto row = to_row(s * x);
            if (!row) {
                overflow = true;
                continue;
            }
            if (row->pivot() < 0) continue;
            row->combo = {{s, k}};
            rows.push_back(std::move(*row));
        }

        // eliminate
        std::map<int, std::size_t> pivots; // pivot column -> row
        for (std::size_t r = 0; r < rows.size(); ++r) {
            int p = rows[r].pivot();
            while (p >= 0 && pivots.count(p)) {
                rows[r].add(rows[pivots[p]]);
                p = rows[r].pivot();
            }
            if (p >= 0) pivots[p] = r;
        }

        auto trow = to_row(target);
        if (!trow) {
            tr.status = ReachStatus::undecided;
            tr.witness = "target exceeds enumeration caps";
            res.targets.push_back(tr);
            res.report.fail(name + ": undecided (caps)");
            continue;
        }
        Gf2Row acc = *trow;
        int p = acc.pivot();
        while (p >= 0 && pivots.count(p)) {
            acc.add(rows[pivots[p]]);
            p = acc.pivot();
        }
        if (p < 0) {
            // witness: the combination accumulated during reduction; verify it
            AElement check;
            std::string wit;
            for (const auto& [s, k] : acc.combo) {
                check += s * res.reached[k];
                if (!wit.empty()) wit += " + ";
                wit += (s.is_one() ? "" : s.str() + "*") + "(" + res.reached[k].str() + ")";
            }
            if (check == target) {
                tr.status = ReachStatus::reachable;
                tr.witness = wit;
            } else {
                tr.status = ReachStatus::undecided;
                tr.witness = "internal: witness failed re-evaluation";
                res.report.fail(name + ": witness failed re-evaluation");
            }
        } else {
            tr.status = overflow ? ReachStatus::undecided
                                 : ReachStatus::not_in_span_within_caps;
            if (overflow) tr.witness = "span truncated by enumeration caps";
        }
        if (tr.status != ReachStatus::reachable && tr.status != ReachStatus::not_in_span_within_caps
            && tr.witness.empty())
            tr.witness = "undecided within caps";
        res.targets.push_back(tr);
    }
    return res;
}

} // namespace mdsa
