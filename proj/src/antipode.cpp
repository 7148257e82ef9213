#include "mdsa/antipode.hpp"

#include <mutex>

namespace mdsa {

namespace {

std::recursive_mutex chi_mutex;
std::map<Generator, AElement> chi_memo;

AElement chi_generator_locked(const Generator& g) {
    auto it = chi_memo.find(g);
    if (it != chi_memo.end()) return it->second;
    int r = g.index;
    AElement result = AElement::generator(g);
    if (g.is_tau) {
        for (int i = 0; i < r; ++i)
            result += AElement::xi(r - i, 1 << i) * chi_generator_locked(tau_gen(i));
    } else {
        for (int i = 1; i < r; ++i)
            result += AElement::xi(r - i, 1 << i) * chi_generator_locked(xi_gen(i));
    }
    chi_memo.emplace(g, result);
    return result;
}

} // namespace

AElement chi_generator(const Generator& g) {
    std::lock_guard<std::recursive_mutex> lk(chi_mutex);
    return chi_generator_locked(g);
}

AElement chi(const AElement& a) {
    AElement r;
    for (const auto& [m, s] : a.terms()) {
        // chi on the scalar: tau -> tau + rho*tau_0, rho -> rho (equals eta_r)
        AElement part = eta_r(s);
        for (int i = 0; i < 63; ++i)
            if (m.has_tau(i)) part *= chi_generator(tau_gen(i));
        for (auto [i, e] : m.xi_exps())
            part *= chi_generator(xi_gen(i)).pow(e);
        r += part;
    }
    return r;
}

namespace chi_cache {

void clear() {
    std::lock_guard<std::recursive_mutex> lk(chi_mutex);
    chi_memo.clear();
}

std::size_t size() {
    std::lock_guard<std::recursive_mutex> lk(chi_mutex);
    return chi_memo.size();
}

std::map<std::string, AElement> snapshot() {
    std::lock_guard<std::recursive_mutex> lk(chi_mutex);
    std::map<std::string, AElement> out;
    for (const auto& [g, v] : chi_memo) out.emplace(g.name(), v);
    return out;
}

void restore(const std::map<std::string, AElement>& entries) {
    std::lock_guard<std::recursive_mutex> lk(chi_mutex);
    for (const auto& [name, v] : entries) {
        if (name.size() < 2) continue;
        bool is_tau = name[0] == 'T';
        int idx = std::stoi(name.substr(1));
        chi_memo.emplace(Generator{is_tau, idx}, v);
    }
}

} // namespace chi_cache

} // namespace mdsa
