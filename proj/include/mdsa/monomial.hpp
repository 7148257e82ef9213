#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdsa/bidegree.hpp"

namespace mdsa {

// One generator factor: tau_i or xi_i.
struct Generator {
    bool is_tau = true;
    int index = 0; // tau: i >= 0, xi: i >= 1

    Bidegree bidegree() const {
        std::int64_t two_i = std::int64_t(1) << index;
        if (is_tau) return {int(2 * two_i - 1), int(two_i - 1)};
        return {int(2 * (two_i - 1)), int(two_i - 1)};
    }
    std::string name() const {
        return (is_tau ? "T" : "X") + std::to_string(index);
    }
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline Generator tau_gen(int i) {
    if (i < 0) throw std::invalid_argument("tau index must be >= 0");
    return {true, i};
}
inline Generator xi_gen(int i) {
    if (i < 1) throw std::invalid_argument("xi index must be >= 1");
    return {false, i};
}

// Admissible monomial tau^E xi^R: each tau_i with exponent in {0,1} (bitmask),
// xi exponents unrestricted (sorted index -> exponent, exponents >= 1).
class GenMonomial {
public:
    GenMonomial() = default;

    static GenMonomial one() { return GenMonomial(); }
    static GenMonomial tau(int i) {
        GenMonomial m;
        m.set_tau(i);
        return m;
    }
    static GenMonomial xi(int i, int exp = 1) {
        GenMonomial m;
        m.set_xi(i, exp);
        return m;
    }
    static GenMonomial from(const Generator& g) {
        return g.is_tau ? tau(g.index) : xi(g.index);
    }

    bool is_one() const { return tau_mask_ == 0 && xi_.empty(); }

    bool has_tau(int i) const { return (tau_mask_ >> i) & 1u; }
    std::uint64_t tau_mask() const { return tau_mask_; }
    const std::vector<std::pair<int, int>>& xi_exps() const { return xi_; }

    void set_tau(int i) {
        if (i < 0 || i >= 63) throw std::invalid_argument("tau index out of range");
        if (has_tau(i)) throw std::logic_error("tau exponent would exceed 1");
        tau_mask_ |= (std::uint64_t(1) << i);
    }
    void set_xi(int i, int exp) {
        if (i < 1) throw std::invalid_argument("xi index must be >= 1");
        if (exp < 0) throw std::invalid_argument("xi exponent must be >= 0");
        if (exp == 0) return;
        auto it = std::lower_bound(xi_.begin(), xi_.end(), std::make_pair(i, 0));
        if (it != xi_.end() && it->first == i) it->second += exp;
        else xi_.insert(it, {i, exp});
    }

    Bidegree bidegree() const {
        Bidegree d;
        for (int i = 0; i < 63; ++i)
            if (has_tau(i)) d += tau_gen(i).bidegree();
        for (auto [i, r] : xi_) {
            Bidegree g = xi_gen(i).bidegree();
            d += {r * g.p, r * g.q};
        }
        return d;
    }
    int top_degree() const { return bidegree().p; }

    int max_index() const {
        int m = -1;
        for (int i = 0; i < 63; ++i)
            if (has_tau(i)) m = std::max(m, i);
        if (!xi_.empty()) m = std::max(m, xi_.back().first);
        return m;
    }

    // factor list for Cartan recursion: each tau once, xi_i repeated exp times
    std::vector<Generator> factors() const {
        std::vector<Generator> fs;
        for (int i = 0; i < 63; ++i)
            if (has_tau(i)) fs.push_back(tau_gen(i));
        for (auto [i, r] : xi_)
            for (int k = 0; k < r; ++k) fs.push_back(xi_gen(i));
        return fs;
    }

    friend auto operator<=>(const GenMonomial&, const GenMonomial&) = default;

    std::string str() const {
        if (is_one()) return "1";
        std::string out;
        auto app = [&out](const std::string& s) {
            if (!out.empty()) out += "*";
            out += s;
        };
        for (int i = 0; i < 63; ++i)
            if (has_tau(i)) app("T" + std::to_string(i));
        for (auto [i, r] : xi_) {
            std::string s = "X" + std::to_string(i);
            if (r > 1) s += "^" + std::to_string(r);
            app(s);
        }
        return out;
    }

private:
    std::uint64_t tau_mask_ = 0;
    std::vector<std::pair<int, int>> xi_; // sorted by index, exponents >= 1
};

} // namespace mdsa
