#include "mdsa/expr.hpp"

#include <cctype>

#include "mdsa/antipode.hpp"
#include "mdsa/power_ops.hpp"

namespace mdsa {

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    int column() { return int(pos) + 1; }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "' " + what, column());
    }
    int integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw ParseError("expected integer", int(start) + 1);
        return std::stoi(text.substr(start, pos - start));
    }
    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos]))))
            ++pos;
        return text.substr(start, pos - start);
    }
};

Expr parse_sum(Lexer& lx);

Expr parse_atom(Lexer& lx) {
    lx.skip_ws();
    int col = lx.column();
    if (lx.accept('(')) {
        Expr inner = parse_sum(lx);
        lx.expect(')', "to close parenthesis");
        return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
        int v = lx.integer();
        if (v != 0 && v != 1)
            throw ParseError("only literals 0 and 1 are allowed", col);
        Expr e;
        e.kind = Expr::Kind::literal;
        e.value = v;
        return e;
    }
    std::string w = lx.word();
    if (w.empty()) throw ParseError("expected generator, operator or '('", col);

    if (w == "Q" || w == "Sq") {
        Expr e;
        e.kind = Expr::Kind::apply;
        e.name = w;
        lx.expect('[', "after operator name");
        e.op_index = lx.integer();
        lx.expect(']', "after operator index");
        lx.expect('(', "before operator argument");
        e.children.push_back(parse_sum(lx));
        lx.expect(')', "after operator argument");
        return e;
    }
    if (w == "psi" || w == "chi") {
        Expr e;
        e.kind = Expr::Kind::apply;
        e.name = w;
        lx.expect('(', "before operator argument");
        e.children.push_back(parse_sum(lx));
        lx.expect(')', "after operator argument");
        return e;
    }
    if (w == "tau" || w == "rho" || w == "u" || w == "v" ||
        (w.size() >= 2 && (w[0] == 'T' || w[0] == 'X') &&
         std::all_of(w.begin() + 1, w.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))) {
        Expr e;
        e.kind = Expr::Kind::generator;
        e.name = w;
        return e;
    }
    throw ParseError("unknown generator name '" + w + "'", col);
}

Expr parse_factor(Lexer& lx) {
    Expr base = parse_atom(lx);
    if (lx.accept('^')) {
        Expr e;
        e.kind = Expr::Kind::power;
        e.exponent = lx.integer();
        e.children.push_back(std::move(base));
        return e;
    }
    return base;
}

Expr parse_term(Lexer& lx) {
    Expr first = parse_factor(lx);
    if (lx.peek() != '*') return first;
    Expr e;
    e.kind = Expr::Kind::product;
    e.children.push_back(std::move(first));
    while (lx.accept('*')) e.children.push_back(parse_factor(lx));
    return e;
}

Expr parse_sum(Lexer& lx) {
    Expr first = parse_term(lx);
    if (lx.peek() != '+') return first;
    Expr e;
    e.kind = Expr::Kind::sum;
    e.children.push_back(std::move(first));
    while (lx.accept('+')) e.children.push_back(parse_term(lx));
    return e;
}

bool is_scalar(const AElement& a) {
    return a.is_zero() ||
           (a.terms().size() == 1 && a.terms().begin()->first.is_one());
}

Value add_values(Value x, Value y) {
    if (x.index() != y.index()) {
        // adding zero across domains is fine
        if (std::holds_alternative<AElement>(x) && std::get<AElement>(x).is_zero())
            return y;
        if (std::holds_alternative<AElement>(y) && std::get<AElement>(y).is_zero())
            return x;
        throw EvalError("cannot add values from different rings");
    }
    if (auto* a = std::get_if<AElement>(&x)) return *a + std::get<AElement>(y);
    if (auto* b = std::get_if<BSigmaElement>(&x)) return *b + std::get<BSigmaElement>(y);
    return std::get<TensorElement>(x) + std::get<TensorElement>(y);
}

Value mul_values(Value x, Value y) {
    // scalar A-elements multiply anything
    if (std::holds_alternative<AElement>(x) && !std::holds_alternative<AElement>(y)) {
        const AElement& a = std::get<AElement>(x);
        if (is_scalar(a)) {
            BaseScalar s = counit(a);
            if (auto* b = std::get_if<BSigmaElement>(&y)) return s * *b;
            return s * std::get<TensorElement>(y);
        }
    }
    if (std::holds_alternative<AElement>(y) && !std::holds_alternative<AElement>(x))
        return mul_values(std::move(y), std::move(x));
    if (x.index() != y.index()) throw EvalError("cannot multiply values from different rings");
    if (auto* a = std::get_if<AElement>(&x)) return *a * std::get<AElement>(y);
    if (auto* b = std::get_if<BSigmaElement>(&x)) return *b * std::get<BSigmaElement>(y);
    return std::get<TensorElement>(x) * std::get<TensorElement>(y);
}

Value pow_value(Value x, int k) {
    if (auto* a = std::get_if<AElement>(&x)) {
        if (k < 0) throw EvalError("negative powers are only defined for v");
        return a->pow(k);
    }
    if (auto* b = std::get_if<BSigmaElement>(&x)) return b->pow(k);
    if (k < 0) throw EvalError("negative powers are only defined for v");
    return std::get<TensorElement>(x).pow(k);
}

} // namespace

Expr parse_expr(const std::string& text) {
    Lexer lx{text};
    Expr e = parse_sum(lx);
    if (!lx.eof()) throw ParseError("unexpected trailing input", lx.column());
    return e;
}

Value eval_expr(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::literal:
        return e.value == 0 ? AElement::zero() : AElement::one();
    case Expr::Kind::generator: {
        if (e.name == "tau") return AElement::scalar(BaseScalar::tau());
        if (e.name == "rho") return AElement::scalar(BaseScalar::rho());
        if (e.name == "u") return BSigmaElement::u();
        if (e.name == "v") return BSigmaElement::v();
        int idx = std::stoi(e.name.substr(1));
        if (e.name[0] == 'T') return AElement::tau(idx);
        return AElement::xi(idx);
    }
    case Expr::Kind::sum: {
        Value acc = eval_expr(e.children[0]);
        for (std::size_t i = 1; i < e.children.size(); ++i)
            acc = add_values(std::move(acc), eval_expr(e.children[i]));
        return acc;
    }
    case Expr::Kind::product: {
        Value acc = eval_expr(e.children[0]);
        for (std::size_t i = 1; i < e.children.size(); ++i)
            acc = mul_values(std::move(acc), eval_expr(e.children[i]));
        return acc;
    }
    case Expr::Kind::power:
        return pow_value(eval_expr(e.children[0]), e.exponent);
    case Expr::Kind::apply: {
        Value arg = eval_expr(e.children[0]);
        if (e.name == "psi") {
            if (auto* a = std::get_if<AElement>(&arg)) return psi(*a);
            throw EvalError("psi applies to dual-Steenrod elements; use 'coact bsigma'");
        }
        if (e.name == "chi") {
            if (auto* a = std::get_if<AElement>(&arg)) return chi(*a);
            throw EvalError("chi applies to dual-Steenrod elements");
        }
        int i = (e.name == "Sq") ? -e.op_index : e.op_index;
        if (auto* a = std::get_if<AElement>(&arg)) return q_element(i, *a);
        if (auto* b = std::get_if<BSigmaElement>(&arg)) return q_on_bsigma(i, *b);
        throw EvalError("Q does not apply to tensors");
    }
    }
    throw EvalError("unreachable expression kind");
}

std::string print_value(const Value& v) {
    if (auto* a = std::get_if<AElement>(&v)) return a->str();
    if (auto* b = std::get_if<BSigmaElement>(&v)) return b->str();
    return std::get<TensorElement>(v).str();
}

} // namespace mdsa
