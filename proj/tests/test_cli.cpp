#include <doctest.h>

#include <fstream>
#include <sstream>

#include "mdsa/antipode.hpp"
#include "mdsa/cache.hpp"
#include "mdsa/cli.hpp"
#include "mdsa/expr.hpp"
#include "mdsa/json_io.hpp"
#include "mdsa/power_ops.hpp"

using namespace mdsa;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

AElement eval_a(const std::string& text) {
    return std::get<AElement>(eval_expr(parse_expr(text)));
}

} // namespace

TEST_CASE("parse_expr AST shapes") {
    Expr e = parse_expr("Q[2](T0)");
    CHECK(e.kind == Expr::Kind::apply);
    CHECK(e.name == "Q");
    CHECK(e.op_index == 2);

    Expr s = parse_expr("T0*T0 + tau*X1");
    CHECK(s.kind == Expr::Kind::sum);
    REQUIRE(s.children.size() == 2);
    CHECK(s.children[0].kind == Expr::Kind::product);
    CHECK(s.children[1].kind == Expr::Kind::product);
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_expr("Q[(T0)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.column == 3);
    }
    CHECK_THROWS_AS(parse_expr("Z9"), ParseError);
    CHECK_THROWS_AS(parse_expr("T0 +"), ParseError);
    CHECK_THROWS_AS(parse_expr("T0 X1"), ParseError);
}

TEST_CASE("expression evaluation") {
    CHECK(eval_a("T0^2") == eval_a("tau*X1 + rho*T1 + rho*T0*X1"));
    CHECK(eval_a("Q[2](T0)") == eval_a("T1 + X1*T0"));
    CHECK(eval_a("chi(T1)") == eval_a("T1 + X1*T0"));
    CHECK(eval_a("Sq[2](X1)") == eval_a("Q[-2](X1)"));
    CHECK(eval_a("0").is_zero());
    CHECK(eval_a("1 + 1").is_zero());

    // BSigma domain with scalar coefficients and v^-1
    auto b = std::get<BSigmaElement>(eval_expr(parse_expr("u*v + tau*v^2")));
    CHECK(b.coefficient({1, 1}).is_one());
    CHECK(b.coefficient({0, 2}) == BaseScalar::tau());
    auto binv = std::get<BSigmaElement>(eval_expr(parse_expr("v^-1 * v")));
    CHECK(binv == BSigmaElement::one());

    CHECK_THROWS_AS(eval_expr(parse_expr("u + T0")), EvalError);
}

TEST_CASE("round trip: parse(print(e)) is the same canonical value") {
    std::vector<std::string> exprs = {
        "T0^2", "Q[2](T0)", "Q[4](X1)", "chi(T2)", "T0*T1*X1 + tau*X2",
        "Q[6](T0)", "rho^2*T1 + tau^2*X1",
    };
    for (const std::string& s : exprs) {
        AElement v = eval_a(s);
        CHECK(eval_a(v.str()) == v);
    }
}

TEST_CASE("cli eval/q/psi/chi plain output") {
    RunResult r = run({"q", "-i", "2", "T0"});
    CHECK(r.code == 0);
    CHECK(eval_a(r.out) == eval_a("T1 + X1*T0"));

    r = run({"eval", "T0^2"});
    CHECK(r.code == 0);
    CHECK(eval_a(r.out) == eval_a("tau*X1 + rho*T1 + rho*T0*X1"));

    r = run({"chi", "X2"});
    CHECK(r.code == 0);
    CHECK(eval_a(r.out) == eval_a("X2 + X1^3"));

    r = run({"psi", "T1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(x)") != std::string::npos);
}

TEST_CASE("cli json output re-parses to identical values") {
    RunResult r = run({"--json", "eval", "T0^2 + tau*X1"});
    CHECK(r.code == 0);
    CHECK(aelement_from_json(json::parse(r.out)) == eval_a("T0^2 + tau*X1"));

    r = run({"--json", "psi", "T1"});
    CHECK(r.code == 0);
    TensorElement t = tensor_from_json(json::parse(r.out));
    CHECK(t == psi(AElement::tau(1)));

    r = run({"--json", "eval", "u*v"});
    CHECK(r.code == 0);
    CHECK(bsigma_from_json(json::parse(r.out)) ==
          std::get<BSigmaElement>(eval_expr(parse_expr("u*v"))));
}

TEST_CASE("cli basis command") {
    RunResult r = run({"--caps", "tau=0,rho=0,idx=3", "basis", "3", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2 basis elements") != std::string::npos);
}

TEST_CASE("cli coact commands") {
    RunResult r = run({"--window", "0:8", "coact", "bsigma", "u"});
    CHECK(r.code == 0);
    CHECK(r.out.find("u(x)") != std::string::npos);

    r = run({"--window", "-4:4", "coact", "ops", "v^-1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("e[1]") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    // malformed input -> 2
    CHECK(run({"eval", "Q[(T0)"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"q", "-i", "2", "tau*T0"}).code == 2); // non-F2 input to Q
    // window too small for a series identity -> usage error, not a crash
    RunResult r = run({"--window", "0:2", "verify", "inversion"});
    CHECK(r.code == 1);
}

TEST_CASE("cli verify suites pass") {
    RunResult r = run({"--cache", "build-test-cache", "verify", "series"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS] criterion 3") != std::string::npos);

    r = run({"--cache", "build-test-cache", "verify", "inversion"});
    CHECK(r.code == 0);

    // a narrow window is still a valid (if weak) verification
    r = run({"--window", "0:4", "--cache", "build-test-cache", "verify", "recurrences"});
    CHECK(r.code == 0);

    // verification failure exit code: a window too small to even compute on
    RunResult bad = run({"--window", "0:2", "--cache", "build-test-cache", "verify",
                         "inversion"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("[FAIL]") != std::string::npos);
}

TEST_CASE("cli cache commands") {
    RunResult r = run({"--cache", "build-test-cache", "cache", "info"});
    CHECK(r.code == 0);
    CHECK(r.out.find("cache dir") != std::string::npos);
    r = run({"--cache", "build-test-cache", "cache", "clear"});
    CHECK(r.code == 0);
}

TEST_CASE("cache files round-trip and invalidate on convention change") {
    CacheConfig cfg;
    cfg.dir = "build-test-cache-rt";
    cfg.window_lo = -40;
    cfg.window_hi = 40;
    cache_clear(cfg);

    q_cache::clear();
    chi_cache::clear();
    AElement v4 = q_generator(4, tau_gen(0));
    chi(AElement::tau(2));
    std::size_t q_n = q_cache::size(), chi_n = chi_cache::size();
    CHECK(q_n > 0);
    CHECK(chi_n > 0);
    cache_save(cfg);

    q_cache::clear();
    chi_cache::clear();
    cache_load(cfg);
    CHECK(q_cache::size() > 0);
    CHECK(chi_cache::size() == chi_n);
    CHECK(q_generator(4, tau_gen(0)) == v4);

    // a different window changes the convention hash: the file is discarded
    q_cache::clear();
    chi_cache::clear();
    CacheConfig other = cfg;
    other.window_hi = 64;
    std::string status = cache_load(other);
    CHECK(q_cache::size() == 0);
    CHECK(status.find("none") != std::string::npos);
    cache_clear(cfg);
}

TEST_CASE("MDSA_CACHE environment override") {
    setenv("MDSA_CACHE", "env-cache-dir", 1);
    CHECK(default_cache_dir() == std::filesystem::path("env-cache-dir"));
    unsetenv("MDSA_CACHE");
}

TEST_CASE("config file mirrors flags") {
    {
        std::ofstream out("build-test-config.json");
        out << R"({"window": [-12, 12], "caps": "tau=0,rho=0,idx=2"})";
    }
    RunResult r = run({"--config", "build-test-config.json", "basis", "3", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2 basis elements") != std::string::npos);
    // flags override the config file
    r = run({"--config", "build-test-config.json", "--caps", "tau=0,rho=1,idx=2",
             "basis", "1", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2 basis elements") != std::string::npos); // tau_0 and rho*xi_1
}
