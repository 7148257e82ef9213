#include "mdsa/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

#include "mdsa/cache.hpp"
#include "mdsa/expr.hpp"
#include "mdsa/hopf_check.hpp"
#include "mdsa/json_io.hpp"
#include "mdsa/ops_spectrum.hpp"
#include "mdsa/steinberger.hpp"

namespace mdsa {

namespace {

struct Options {
    Window window{-40, 40};
    bool json = false;
    std::string cache_path;
    std::string caps_spec;
    std::string config_path;
};

Window parse_window(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--window", "expected MIN:MAX");
    return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
}

struct CapsSpec {
    Caps basis{8, 8, 8, 4};
    ClosureCaps closure;
};

CapsSpec parse_caps(const std::string& s) {
    CapsSpec c;
    if (s.empty()) return c;
    std::size_t pos = 0;
    while (pos < s.size()) {
        auto comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--caps", "expected key=value list");
        std::string key = item.substr(0, eq);
        int val = std::stoi(item.substr(eq + 1));
        if (key == "tau") c.basis.tau_exp = val;
        else if (key == "rho") c.basis.rho_exp = val;
        else if (key == "sum") c.basis.scalar_sum = c.closure.scalar_cap = val;
        else if (key == "idx") c.basis.max_index = c.closure.max_gen_index = val;
        else if (key == "deg") c.closure.max_degree = val;
        else throw CLI::ValidationError("--caps", "unknown key '" + key + "'");
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return c;
}

void apply_config_file(Options& opt) {
    if (opt.config_path.empty()) return;
    std::ifstream in(opt.config_path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + opt.config_path);
    json j;
    in >> j;
    if (j.contains("window"))
        opt.window = {j["window"].at(0).get<int>(), j["window"].at(1).get<int>()};
    if (j.contains("cache") && opt.cache_path.empty())
        opt.cache_path = j["cache"].get<std::string>();
    if (j.contains("caps") && opt.caps_spec.empty())
        opt.caps_spec = j["caps"].get<std::string>();
}

CacheConfig cache_config(const Options& opt) {
    CacheConfig cfg;
    cfg.dir = opt.cache_path.empty() ? default_cache_dir()
                                     : std::filesystem::path(opt.cache_path);
    cfg.window_lo = opt.window.lo;
    cfg.window_hi = opt.window.hi;
    return cfg;
}

json value_to_json(const Value& v) {
    if (auto* a = std::get_if<AElement>(&v)) return to_json(*a);
    if (auto* b = std::get_if<BSigmaElement>(&v)) return to_json(*b);
    return to_json(std::get<TensorElement>(v));
}

// ---- verification suites ----

struct Criterion {
    int number;
    std::string label;
    std::function<CheckReport(const Options&)> run;
};

std::vector<Criterion> acceptance_criteria() {
    return {
        {1, "hopf algebroid axioms, monomials of degree <= 24",
         [](const Options&) { return verify_hopf_axioms(24); }},
        {2, "relation consistency psi(tau_i)^2, i <= 4",
         [](const Options&) { return verify_relation_consistency(4); }},
        {3, "generating-function identities up to t^33",
         [](const Options& o) {
             Window w{std::min(o.window.lo, -40), std::max(o.window.hi, 40)};
             CheckReport rep = verify_comp_inv(w);
             rep.count();
             if (w.hi < 33) rep.fail("window does not reach t^33");
             return rep;
         }},
        {4, "inversion trick, r in [-5,5], s in [-16,16]",
         [](const Options& o) {
             return verify_inversion_trick(-5, 5, -16, 16, o.window);
         }},
        {5, "closed-form spot values via two code paths",
         [](const Options&) { return verify_spot_values(); }},
        {6, "conjugate reach Q^{2^{k+1}-2/-3}(tau_0), k <= 4",
         [](const Options&) { return verify_conjugate_reach(4); }},
        {7, "recurrence suite, n <= 4",
         [](const Options& o) { return verify_recurrences(4, o.window); }},
        {8, "co-Nishida master identity, x in {u, v}",
         [](const Options& o) {
             CheckReport rep = verify_conishida('u', -8, 8, 32, o.window);
             rep.merge(verify_conishida('v', -8, 8, 32, o.window));
             rep.name = "conishida(u and v)";
             return rep;
         }},
        {9, "Steinberger relations and closure witnesses",
         [](const Options&) {
             CheckReport rep = verify_tau_relation(4);
             rep.merge(verify_xi_identity(4));
             ClosureCaps caps;
             caps.max_degree = 15;
             caps.max_gen_index = 4;
             caps.q_lo = -4;
             caps.q_hi = 14;
             caps.constructive_k = 3;
             ClosureResult cl =
                 closure_generate(AElement::tau(0), caps, generator_targets(2));
             rep.merge(cl.report);
             for (const TargetReport& t : cl.targets) {
                 rep.count();
                 if (t.status != ReachStatus::reachable)
                     rep.fail("closure: " + t.name + " not certified reachable");
                 else
                     rep.note(t.name + " = " + t.witness);
             }
             rep.name = "steinberger";
             return rep;
         }},
        {10, "ops-comodule compatibility, i in [-8,8]",
         [](const Options&) { return verify_ops_compat(-8, 8, 16); }},
        {11, "property sweeps: squaring, vanishing, additivity, Cartan",
         [](const Options&) {
             CheckReport rep = verify_q_properties(12);
             rep.merge(verify_q_random_properties(200, 0x5eedu));
             rep.name = "property_sweeps";
             return rep;
         }},
    };
}

int run_criteria(const std::vector<Criterion>& cs, const Options& opt, bool as_json,
                 std::ostream& out) {
    bool all_pass = true;
    json results = json::array();
    for (const Criterion& c : cs) {
        auto start = std::chrono::steady_clock::now();
        CheckReport rep;
        try {
            rep = c.run(opt);
        } catch (const std::exception& ex) {
            rep.name = c.label;
            rep.fail(std::string("exception: ") + ex.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                    start)
                          .count();
        all_pass = all_pass && rep.passed();
        if (as_json) {
            json r = to_json(rep);
            r["criterion"] = c.number;
            r["seconds"] = secs;
            results.push_back(r);
        } else {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%6.2fs", secs);
            out << (rep.passed() ? "[PASS]" : "[FAIL]") << " criterion " << c.number
                << ": " << c.label << " (" << rep.checks << " checks, " << buf << ")\n";
            for (const auto& f : rep.failures) out << "       witness: " << f << "\n";
        }
    }
    if (as_json) out << results.dump(1) << "\n";
    return all_pass ? 0 : 1;
}

const std::map<std::string, std::vector<int>> kSuites = {
    {"hopf", {1, 2}},          {"series", {3}},      {"inversion", {4}},
    {"recurrences", {5, 6, 7}}, {"conishida", {8}},  {"steinberger", {9}},
    {"ops-compat", {10}},      {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}},
};

} // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"mdsa: mod-2 motivic dual Steenrod algebra and its power operations"};
    app.fallthrough();
    app.footer("Generators: T0,T1,... (tau_i), X1,X2,... (xi_i), tau, rho, u, v.\n"
               "Operators in expressions: Q[i](...), Sq[i](...), psi(...), chi(...).\n"
               "The T/X spelling keeps generator names distinct from the series\n"
               "variable t. Default window is -40:40.");

    Options opt;
    app.add_option("--window", [&opt](const std::vector<std::string>& v) {
        opt.window = parse_window(v.back());
        return true;
    }, "series exactness window MIN:MAX (default -40:40)");
    app.add_flag("--json", opt.json, "emit JSON instead of plain text");
    app.add_option("--cache", opt.cache_path, "memo cache directory");
    app.add_option("--caps", opt.caps_spec,
                   "caps: tau=A,rho=B,sum=S,idx=I,deg=D (basis and closure bounds)");
    app.add_option("--config", opt.config_path, "JSON config file mirroring the flags");
    app.require_subcommand(1);

    std::string expr_text, suite, coact_target, cache_action;
    int q_index = 0, basis_p = 0, basis_q = 0;

    CLI::App* eval = app.add_subcommand("eval", "reduce an expression and print it");
    eval->add_option("expr", expr_text, "expression")->required();

    CLI::App* qcmd = app.add_subcommand("q", "apply a power operation Q^i");
    qcmd->add_option("-i,--index", q_index, "operation index")->required();
    qcmd->add_option("expr", expr_text, "expression")->required();

    CLI::App* psicmd = app.add_subcommand("psi", "coproduct of a dual-Steenrod element");
    psicmd->add_option("expr", expr_text, "expression")->required();

    CLI::App* chicmd = app.add_subcommand("chi", "antipode of a dual-Steenrod element");
    chicmd->add_option("expr", expr_text, "expression")->required();

    CLI::App* coact = app.add_subcommand("coact", "comodule coactions");
    coact->add_option("side", coact_target, "bsigma (psi_R) or ops (psi_L of the t-image)")
        ->required()
        ->check(CLI::IsMember({"bsigma", "ops"}));
    coact->add_option("expr", expr_text, "expression in u, v")->required();

    CLI::App* basis = app.add_subcommand("basis", "enumerate the basis of a bidegree");
    basis->add_option("P", basis_p, "topological degree")->required();
    basis->add_option("Q", basis_q, "weight")->required();

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "hopf|series|inversion|recurrences|conishida|"
                                       "ops-compat|steinberger|all")
        ->required();

    CLI::App* cache = app.add_subcommand("cache", "memo cache maintenance");
    cache->add_option("action", cache_action, "clear or info")
        ->required()
        ->check(CLI::IsMember({"clear", "info"}));

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        app.parse(args);
        apply_config_file(opt);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        CacheConfig ccfg = cache_config(opt);
        if (*cache) {
            if (cache_action == "clear") out << cache_clear(ccfg) << "\n";
            else out << cache_info(ccfg) << "\n";
            return 0;
        }
        if (*verify) {
            auto it = kSuites.find(suite);
            if (it == kSuites.end()) {
                err << "unknown suite '" << suite << "'\n";
                return 2;
            }
            cache_load(ccfg);
            std::vector<Criterion> selected;
            for (const Criterion& c : acceptance_criteria())
                if (std::find(it->second.begin(), it->second.end(), c.number) !=
                    it->second.end())
                    selected.push_back(c);
            int code = run_criteria(selected, opt, opt.json, out);
            cache_save(ccfg);
            return code;
        }

        // expression commands
        Value val = eval_expr(parse_expr(expr_text.empty() ? "0" : expr_text));
        if (*eval) {
            out << (opt.json ? value_to_json(val).dump() : print_value(val)) << "\n";
            return 0;
        }
        if (*qcmd) {
            Value result;
            if (auto* a = std::get_if<AElement>(&val)) result = q_element(q_index, *a);
            else if (auto* b = std::get_if<BSigmaElement>(&val))
                result = q_on_bsigma(q_index, *b);
            else {
                err << "error: Q does not apply to tensors\n";
                return 2;
            }
            out << (opt.json ? value_to_json(result).dump() : print_value(result)) << "\n";
            return 0;
        }
        if (*psicmd) {
            auto* a = std::get_if<AElement>(&val);
            if (!a) {
                err << "error: psi applies to dual-Steenrod elements\n";
                return 2;
            }
            TensorElement t = psi(*a);
            out << (opt.json ? to_json(t).dump() : t.str()) << "\n";
            return 0;
        }
        if (*chicmd) {
            auto* a = std::get_if<AElement>(&val);
            if (!a) {
                err << "error: chi applies to dual-Steenrod elements\n";
                return 2;
            }
            AElement c = chi(*a);
            out << (opt.json ? to_json(c).dump() : c.str()) << "\n";
            return 0;
        }
        if (*coact) {
            auto* b = std::get_if<BSigmaElement>(&val);
            if (!b) {
                err << "error: coact expects an expression in u, v\n";
                return 2;
            }
            if (coact_target == "bsigma") {
                BSigmaTensor t = psi_r_bsigma(*b, opt.window);
                out << (opt.json ? to_json(t).dump() : t.str()) << "\n";
            } else {
                OpsTensor t = psi_l_ops(t_map(*b), opt.window);
                out << (opt.json ? to_json(t).dump() : t.str()) << "\n";
            }
            return 0;
        }
        if (*basis) {
            CapsSpec caps = parse_caps(opt.caps_spec);
            auto vecs = basis_enumerate({basis_p, basis_q}, caps.basis);
            if (opt.json) {
                json arr = json::array();
                for (const auto& v : vecs) arr.push_back(to_json(v.element()));
                out << arr.dump() << "\n";
            } else {
                for (const auto& v : vecs) out << v.element().str() << "\n";
                out << "(" << vecs.size() << " basis elements)\n";
            }
            return 0;
        }
    } catch (const ParseError& e) {
        err << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const EvalError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand given\n";
    return 2;
}

} // namespace mdsa
