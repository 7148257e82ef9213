#pragma once

#include <memory>
#include <variant>

#include "mdsa/bsigma.hpp"
#include "mdsa/tensor.hpp"

namespace mdsa {

struct ParseError : std::runtime_error {
    int column; // 1-based position in the input
    ParseError(const std::string& msg, int col)
        : std::runtime_error(msg + " at column " + std::to_string(col)), column(col) {}
};

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// expr   := term {"+" term}
// term   := factor {"*" factor}
// factor := atom ["^" int]
// atom   := generator | op "[" int "]" "(" expr ")" | op "(" expr ")"
//         | "(" expr ")" | "0" | "1"
// generators: T0..Tn, X1..Xn, tau, rho, u, v; ops: Q[i], Sq[i], psi, chi
struct Expr {
    enum class Kind { sum, product, power, generator, apply, literal };
    Kind kind;
    std::vector<Expr> children;
    // generator payload
    std::string name;
    // power payload
    int exponent = 0;
    // apply payload: op name + index (Q/Sq)
    int op_index = 0;
    // literal payload
    int value = 0;
};

Expr parse_expr(const std::string& text);

// Values live in one of three domains; tau/rho scalars may multiply either
// ring, and psi(...) produces a tensor.
using Value = std::variant<AElement, BSigmaElement, TensorElement>;

Value eval_expr(const Expr& e);

// canonical printing: scalars first, then tau factors, then xi factors;
// parse(print(x)) evaluates back to x
std::string print_value(const Value& v);

} // namespace mdsa
