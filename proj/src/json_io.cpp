#include "mdsa/json_io.hpp"

#include "mdsa/tensor.hpp"

namespace mdsa {

namespace {

json scalar_to_json(const BaseScalar& s) {
    json arr = json::array();
    for (const BaseScalar::Mono& m : s.monos()) arr.push_back({m.a, m.b});
    return arr;
}

BaseScalar scalar_from_json(const json& j) {
    BaseScalar s;
    for (const auto& m : j)
        s += BaseScalar::monomial(m.at(0).get<int>(), m.at(1).get<int>());
    return s;
}

json monomial_to_json(const GenMonomial& m) {
    json tau_set = json::array();
    for (int i = 0; i < 63; ++i)
        if (m.has_tau(i)) tau_set.push_back(i);
    json xi_exps = json::object();
    for (auto [i, r] : m.xi_exps()) xi_exps[std::to_string(i)] = r;
    return json{{"tau_set", tau_set}, {"xi_exps", xi_exps}};
}

GenMonomial monomial_from_json(const json& j) {
    GenMonomial m;
    for (const auto& i : j.at("tau_set")) m.set_tau(i.get<int>());
    for (const auto& [k, v] : j.at("xi_exps").items())
        m.set_xi(std::stoi(k), v.get<int>());
    return m;
}

} // namespace

json to_json(const AElement& e) {
    json arr = json::array();
    for (const auto& [m, s] : e.terms()) {
        json t = monomial_to_json(m);
        t["scalar"] = scalar_to_json(s);
        arr.push_back(t);
    }
    return arr;
}

AElement aelement_from_json(const json& j) {
    AElement e;
    for (const auto& t : j)
        e.add_term(monomial_from_json(t), scalar_from_json(t.at("scalar")));
    return e;
}

json to_json(const Bidegree& d) { return json::array({d.p, d.q}); }

Bidegree bidegree_from_json(const json& j) {
    return {j.at(0).get<int>(), j.at(1).get<int>()};
}

json to_json(const ASeries& f) {
    json terms = json::array();
    for (const auto& [k, c] : f.terms())
        terms.push_back({{"t", k.t}, {"s", k.s}, {"coeff", to_json(c)}});
    return json{{"window", {f.lo(), f.hi()}}, {"terms", terms}};
}

ASeries aseries_from_json(const json& j) {
    ASeries f;
    for (const auto& t : j.at("terms"))
        f.add_term(t.at("t").get<int>(), t.at("s").get<int>(),
                   aelement_from_json(t.at("coeff")));
    Window w{j.at("window").at(0).get<int>(), j.at("window").at(1).get<int>()};
    return f.truncated(w);
}

json to_json(const BSigmaElement& e) {
    json terms = json::array();
    for (const auto& [m, s] : e.terms())
        terms.push_back({{"u", m.u}, {"v", m.v}, {"scalar", scalar_to_json(s)}});
    return json{{"terms", terms}};
}

BSigmaElement bsigma_from_json(const json& j) {
    BSigmaElement e;
    for (const auto& t : j.at("terms"))
        e.add_term({t.at("u").get<int>(), t.at("v").get<int>()},
                   scalar_from_json(t.at("scalar")));
    return e;
}

json to_json(const OpsElement& e) {
    json terms = json::array();
    for (const auto& [i, s] : e.terms())
        terms.push_back({{"e", i}, {"scalar", scalar_to_json(s)}});
    return json{{"suspended", e.suspended()}, {"terms", terms}};
}

OpsElement ops_from_json(const json& j) {
    OpsElement e(j.at("suspended").get<bool>());
    for (const auto& t : j.at("terms"))
        e.add_term(t.at("e").get<int>(), scalar_from_json(t.at("scalar")));
    return e;
}

json to_json(const BSigmaTensor& t) {
    json terms = json::array();
    for (const auto& [m, a] : t.terms())
        terms.push_back({{"u", m.u}, {"v", m.v}, {"coeff", to_json(a)}});
    return json{{"v_window", {t.vlo(), t.vhi()}}, {"terms", terms}};
}

json to_json(const OpsTensor& t) {
    json terms = json::array();
    for (const auto& [i, a] : t.terms())
        terms.push_back({{"e", i}, {"coeff", to_json(a)}});
    return json{{"suspended", t.suspended()},
                {"e_window", {t.elo(), t.ehi()}},
                {"terms", terms}};
}

json to_json(const TensorElement& t) {
    json terms = json::array();
    for (const auto& [k, s] : t.terms()) {
        json e = monomial_to_json(k.first);
        e["right"] = monomial_to_json(k.second);
        e["scalar"] = scalar_to_json(s);
        terms.push_back(e);
    }
    return json{{"terms", terms}};
}

TensorElement tensor_from_json(const json& j) {
    TensorElement t;
    for (const auto& e : j.at("terms"))
        t.add_monomial_term(monomial_from_json(e), monomial_from_json(e.at("right")),
                            scalar_from_json(e.at("scalar")));
    return t;
}

json to_json(const CheckReport& r) {
    return json{{"name", r.name},
                {"passed", r.passed()},
                {"checks", r.checks},
                {"failures", r.failures},
                {"notes", r.notes}};
}

json to_json(const ClosureResult& r, const ClosureCaps& caps) {
    json targets = json::array();
    for (const TargetReport& t : r.targets) {
        const char* status = t.status == ReachStatus::reachable
                                 ? "reachable"
                                 : (t.status == ReachStatus::not_in_span_within_caps
                                        ? "not-in-span-within-caps"
                                        : "undecided-within-caps");
        targets.push_back({{"target", t.name},
                           {"status", status},
                           {"witness", t.witness},
                           {"element", to_json(t.target)}});
    }
    return json{{"targets", targets},
                {"reached_count", r.reached.size()},
                {"caps",
                 {{"max_degree", caps.max_degree},
                  {"max_gen_index", caps.max_gen_index},
                  {"scalar_cap", caps.scalar_cap},
                  {"q_range", {caps.q_lo, caps.q_hi}},
                  {"product_rounds", caps.product_rounds}}}};
}

} // namespace mdsa
