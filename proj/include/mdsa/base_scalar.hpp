#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdsa/bidegree.hpp"

namespace mdsa {

// Element of the base ring M = F2[tau, rho]. Stored as the set of monomials
// tau^a rho^b that occur with coefficient 1; adding a monomial twice cancels
// it. Kept as a sorted vector.
//
// Grading: |tau| = (0,-1), |rho| = (-1,-1).
class BaseScalar {
public:
    struct Mono {
        int a = 0; // tau exponent
        int b = 0; // rho exponent
        friend auto operator<=>(const Mono&, const Mono&) = default;
        Bidegree bidegree() const { return {-b, -(a + b)}; }
    };

    BaseScalar() = default;

    static BaseScalar zero() { return BaseScalar(); }
    static BaseScalar one() { return monomial(0, 0); }
    static BaseScalar tau() { return monomial(1, 0); }
    static BaseScalar rho() { return monomial(0, 1); }
    static BaseScalar monomial(int a, int b) {
        if (a < 0 || b < 0) throw std::invalid_argument("BaseScalar: negative exponent");
        BaseScalar s;
        s.monos_.push_back({a, b});
        return s;
    }

    bool is_zero() const { return monos_.empty(); }
    bool is_one() const { return monos_.size() == 1 && monos_[0] == Mono{0, 0}; }
    const std::vector<Mono>& monos() const { return monos_; }

    friend bool operator==(const BaseScalar&, const BaseScalar&) = default;
    friend auto operator<=>(const BaseScalar&, const BaseScalar&) = default;

    // characteristic-2 sum: symmetric difference of the monomial sets
    friend BaseScalar operator+(const BaseScalar& x, const BaseScalar& y) {
        BaseScalar r;
        std::set_symmetric_difference(x.monos_.begin(), x.monos_.end(),
                                      y.monos_.begin(), y.monos_.end(),
                                      std::back_inserter(r.monos_));
        return r;
    }

    friend BaseScalar operator*(const BaseScalar& x, const BaseScalar& y) {
        BaseScalar r;
        for (const Mono& m : x.monos_)
            for (const Mono& n : y.monos_)
                r.toggle({m.a + n.a, m.b + n.b});
        return r;
    }

    BaseScalar& operator+=(const BaseScalar& o) { return *this = *this + o; }
    BaseScalar& operator*=(const BaseScalar& o) { return *this = *this * o; }

    // square: termwise in characteristic 2
    BaseScalar squared() const {
        BaseScalar r;
        for (const Mono& m : monos_) r.monos_.push_back({2 * m.a, 2 * m.b});
        return r;
    }

    BaseScalar pow(int k) const {
        if (k < 0) throw std::invalid_argument("BaseScalar::pow: negative exponent");
        BaseScalar r = one(), base = *this;
        while (k > 0) {
            if (k & 1) r *= base;
            base = base.squared();
            k >>= 1;
        }
        return r;
    }

    // common bidegree of all monomials, if homogeneous
    std::optional<Bidegree> bidegree() const {
        if (monos_.empty()) return std::nullopt;
        Bidegree d = monos_[0].bidegree();
        for (const Mono& m : monos_)
            if (m.bidegree() != d) return std::nullopt;
        return d;
    }

    bool homogeneous() const { return is_zero() || bidegree().has_value(); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (const Mono& m : monos_) {
            if (!out.empty()) out += "+";
            std::string part;
            if (m.a == 1) part = "tau";
            else if (m.a > 1) part = "tau^" + std::to_string(m.a);
            if (m.b >= 1) {
                if (!part.empty()) part += "*";
                part += (m.b == 1) ? "rho" : "rho^" + std::to_string(m.b);
            }
            out += part.empty() ? "1" : part;
        }
        return out;
    }

private:
    void toggle(Mono m) {
        auto it = std::lower_bound(monos_.begin(), monos_.end(), m);
        if (it != monos_.end() && *it == m) monos_.erase(it);
        else monos_.insert(it, m);
    }

    std::vector<Mono> monos_; // sorted, unique
};

} // namespace mdsa
