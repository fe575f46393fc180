#include "frontal/expr.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cmath>

namespace frontal {

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make_node(Expr::Node n) { return std::make_shared<const Expr::Node>(std::move(n)); }

NodePtr make_literal(double v) {
    Expr::Node n;
    n.kind = Expr::Kind::Literal;
    n.literal = v;
    return make_node(std::move(n));
}

NodePtr make_unary(Expr::Kind k, NodePtr a) {
    Expr::Node n;
    n.kind = k;
    n.a = std::move(a);
    return make_node(std::move(n));
}

NodePtr make_binary(Expr::Kind k, NodePtr a, NodePtr b) {
    Expr::Node n;
    n.kind = k;
    n.a = std::move(a);
    n.b = std::move(b);
    return make_node(std::move(n));
}

// '^' with an integer-valued literal exponent (possibly negated) becomes
// an integer-power node; everything else stays a general power.
NodePtr make_pow(NodePtr base, NodePtr exponent) {
    const Expr::Node* e = exponent.get();
    bool negate = false;
    if (e->kind == Expr::Kind::Neg && e->a->kind == Expr::Kind::Literal) {
        negate = true;
        e = e->a.get();
    }
    if (e->kind == Expr::Kind::Literal) {
        const double val = e->literal;
        if (std::floor(val) == val && std::abs(val) <= 1e9) {
            Expr::Node n;
            n.kind = Expr::Kind::IntPow;
            n.ipow = static_cast<long long>(val) * (negate ? -1 : 1);
            n.a = std::move(base);
            return make_node(std::move(n));
        }
    }
    return make_binary(Expr::Kind::Pow, std::move(base), std::move(exponent));
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr run() {
        NodePtr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError(pos_, "end of input or operator");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr parse_expr() {
        NodePtr e = parse_term();
        for (;;) {
            if (accept('+'))
                e = make_binary(Expr::Kind::Add, e, parse_term());
            else if (accept('-'))
                e = make_binary(Expr::Kind::Sub, e, parse_term());
            else
                return e;
        }
    }

    NodePtr parse_term() {
        NodePtr e = parse_factor();
        for (;;) {
            if (accept('*'))
                e = make_binary(Expr::Kind::Mul, e, parse_factor());
            else if (accept('/'))
                e = make_binary(Expr::Kind::Div, e, parse_factor());
            else
                return e;
        }
    }

    NodePtr parse_factor() {
        if (accept('-')) return make_unary(Expr::Kind::Neg, parse_factor());
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        if (accept('^')) return make_pow(base, parse_factor());
        return base;
    }

    NodePtr parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError(pos_, "number, 'u', 'v', function, '(' or '-'");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = parse_expr();
            if (!accept(')')) throw SyntaxError(pos_, "')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
        throw SyntaxError(pos_, "number, 'u', 'v', function, '(' or '-'");
    }

    NodePtr parse_number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t mark = exponent_end();
            pos_ = mark;
        }
        const std::string token(text_.substr(start, pos_ - start));
        if (token == ".") throw SyntaxError(start, "digits");
        char* end = nullptr;
        const double value = std::strtod(token.c_str(), &end);
        if (end == token.c_str()) throw SyntaxError(start, "a number");
        return make_literal(value);
    }

    // Consume "e[+-]?digits" only when digits follow; otherwise the 'e'
    // is left in place (it would be an unknown identifier anyway).
    std::size_t exponent_end() {
        std::size_t p = pos_ + 1;
        if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
        std::size_t digits = p;
        while (digits < text_.size() && std::isdigit(static_cast<unsigned char>(text_[digits]))) ++digits;
        return digits > p ? digits : pos_;
    }

    NodePtr parse_identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        if (name == "u") {
            Expr::Node n;
            n.kind = Expr::Kind::VarU;
            return make_node(std::move(n));
        }
        if (name == "v") {
            Expr::Node n;
            n.kind = Expr::Kind::VarV;
            return make_node(std::move(n));
        }
        Expr::Fn fn;
        if (name == "sin")
            fn = Expr::Fn::Sin;
        else if (name == "cos")
            fn = Expr::Fn::Cos;
        else if (name == "exp")
            fn = Expr::Fn::Exp;
        else if (name == "log")
            fn = Expr::Fn::Log;
        else if (name == "sqrt")
            fn = Expr::Fn::Sqrt;
        else
            throw SyntaxError(start, "one of 'u', 'v', sin, cos, exp, log, sqrt (unknown identifier '" +
                                         name + "')");
        if (!accept('(')) throw SyntaxError(pos_, "'(' after function name");
        NodePtr arg = parse_expr();
        if (!accept(')')) throw SyntaxError(pos_, "')'");
        Expr::Node n;
        n.kind = Expr::Kind::Fun;
        n.fn = fn;
        n.a = std::move(arg);
        return make_node(std::move(n));
    }
};

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

const char* fn_name(Expr::Fn fn) {
    switch (fn) {
        case Expr::Fn::Sin: return "sin";
        case Expr::Fn::Cos: return "cos";
        case Expr::Fn::Exp: return "exp";
        case Expr::Fn::Log: return "log";
        case Expr::Fn::Sqrt: return "sqrt";
    }
    return "?";
}

// Fully parenthesized; guarantees the reparse is structurally identical.
void print_node(const Expr::Node& n, std::string& out) {
    switch (n.kind) {
        case Expr::Kind::Literal: out += format_double(n.literal); return;
        case Expr::Kind::VarU: out += 'u'; return;
        case Expr::Kind::VarV: out += 'v'; return;
        case Expr::Kind::Neg:
            out += "(-";
            print_node(*n.a, out);
            out += ')';
            return;
        case Expr::Kind::Fun:
            out += fn_name(n.fn);
            out += '(';
            print_node(*n.a, out);
            out += ')';
            return;
        case Expr::Kind::IntPow:
            out += '(';
            print_node(*n.a, out);
            out += '^';
            out += std::to_string(n.ipow);
            out += ')';
            return;
        default: break;
    }
    const char op = n.kind == Expr::Kind::Add   ? '+'
                    : n.kind == Expr::Kind::Sub ? '-'
                    : n.kind == Expr::Kind::Mul ? '*'
                    : n.kind == Expr::Kind::Div ? '/'
                                                : '^';
    out += '(';
    print_node(*n.a, out);
    out += op;
    print_node(*n.b, out);
    out += ')';
}

template <typename Scalar, typename Ops>
Scalar eval_node(const Expr::Node& n, const Scalar& u, const Scalar& v, const Ops& ops) {
    switch (n.kind) {
        case Expr::Kind::Literal: return ops.constant(n.literal);
        case Expr::Kind::VarU: return u;
        case Expr::Kind::VarV: return v;
        case Expr::Kind::Add: return eval_node(*n.a, u, v, ops) + eval_node(*n.b, u, v, ops);
        case Expr::Kind::Sub: return eval_node(*n.a, u, v, ops) - eval_node(*n.b, u, v, ops);
        case Expr::Kind::Mul: return eval_node(*n.a, u, v, ops) * eval_node(*n.b, u, v, ops);
        case Expr::Kind::Div: return ops.div(eval_node(*n.a, u, v, ops), eval_node(*n.b, u, v, ops));
        case Expr::Kind::Neg: return -eval_node(*n.a, u, v, ops);
        case Expr::Kind::IntPow: return ops.pow_int(eval_node(*n.a, u, v, ops), n.ipow);
        case Expr::Kind::Pow:
            return ops.pow(eval_node(*n.a, u, v, ops), eval_node(*n.b, u, v, ops));
        case Expr::Kind::Fun: {
            Scalar a = eval_node(*n.a, u, v, ops);
            switch (n.fn) {
                case Expr::Fn::Sin: return ops.sin(a);
                case Expr::Fn::Cos: return ops.cos(a);
                case Expr::Fn::Exp: return ops.exp(a);
                case Expr::Fn::Log: return ops.log(a);
                case Expr::Fn::Sqrt: return ops.sqrt(a);
            }
        }
    }
    throw NumericError("corrupt expression node");
}

struct JetOps {
    int order;
    Jet2 constant(double c) const { return Jet2::constant(c, order); }
    Jet2 div(const Jet2& a, const Jet2& b) const { return a / b; }
    Jet2 pow_int(const Jet2& a, long long k) const { return jet_pow_int(a, k); }
    Jet2 pow(const Jet2& a, const Jet2& b) const { return jet_pow(a, b); }
    Jet2 sin(const Jet2& a) const { return jet_sin(a); }
    Jet2 cos(const Jet2& a) const { return jet_cos(a); }
    Jet2 exp(const Jet2& a) const { return jet_exp(a); }
    Jet2 log(const Jet2& a) const { return jet_log(a); }
    Jet2 sqrt(const Jet2& a) const { return jet_sqrt(a); }
};

struct ScalarOps {
    double constant(double c) const { return c; }
    double div(double a, double b) const {
        if (b == 0.0) throw DomainError("division by zero");
        return a / b;
    }
    double pow_int(double a, long long k) const {
        if (a == 0.0 && k < 0) throw DomainError("zero raised to a negative power");
        return std::pow(a, static_cast<double>(k));
    }
    double pow(double a, double b) const {
        if (!(a > 0.0)) throw DomainError("power of a nonpositive base with non-integer exponent");
        return std::pow(a, b);
    }
    double sin(double a) const { return std::sin(a); }
    double cos(double a) const { return std::cos(a); }
    double exp(double a) const { return std::exp(a); }
    double log(double a) const {
        if (!(a > 0.0)) throw DomainError("log of nonpositive value");
        return std::log(a);
    }
    double sqrt(double a) const {
        if (!(a > 0.0)) throw DomainError("sqrt of nonpositive value");
        return std::sqrt(a);
    }
};

bool uses_var(const Expr::Node* n, Expr::Kind var) {
    if (n == nullptr) return false;
    if (n->kind == var) return true;
    return uses_var(n->a.get(), var) || uses_var(n->b.get(), var);
}

bool nodes_equal(const Expr::Node* a, const Expr::Node* b) {
    if (a == nullptr || b == nullptr) return a == b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Expr::Kind::Literal: return a->literal == b->literal;
        case Expr::Kind::IntPow:
            return a->ipow == b->ipow && nodes_equal(a->a.get(), b->a.get());
        case Expr::Kind::Fun:
            return a->fn == b->fn && nodes_equal(a->a.get(), b->a.get());
        default:
            return nodes_equal(a->a.get(), b->a.get()) && nodes_equal(a->b.get(), b->b.get());
    }
}

}  // namespace

Expr Expr::parse(std::string_view text) {
    Parser parser(text);
    return Expr(parser.run());
}

Expr Expr::literal(double value) { return Expr(make_literal(value)); }

std::string Expr::str() const {
    if (!root_) return "";
    std::string out;
    print_node(*root_, out);
    return out;
}

Jet2 Expr::eval(const Jet2& u, const Jet2& v) const {
    if (!root_) throw NumericError("evaluating empty expression");
    if (u.order != v.order) throw DomainError("binding jets have different orders");
    Jet2 r = eval_node<Jet2>(*root_, u, v, JetOps{u.order});
    if (!r.finite()) throw NumericError("non-finite expression value");
    return r;
}

double Expr::eval(double u, double v) const {
    if (!root_) throw NumericError("evaluating empty expression");
    double r = eval_node<double>(*root_, u, v, ScalarOps{});
    if (!std::isfinite(r)) throw NumericError("non-finite expression value");
    return r;
}

bool Expr::uses_u() const { return uses_var(root_.get(), Kind::VarU); }
bool Expr::uses_v() const { return uses_var(root_.get(), Kind::VarV); }

bool Expr::same_structure(const Expr& other) const {
    return nodes_equal(root_.get(), other.root_.get());
}

}  // namespace frontal
