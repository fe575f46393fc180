#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "frontal/jet.hpp"

namespace frontal {

struct SyntaxError : Error {
    SyntaxError(std::size_t at, const std::string& expected_tokens)
        : Error("syntax error at offset " + std::to_string(at) + ": expected " + expected_tokens),
          offset(at),
          expected(expected_tokens) {}
    std::size_t offset;
    std::string expected;
};

// Parsed scalar function of (u,v). Immutable and freely shareable across
// threads; evaluation over jets supplies all derivatives.
//
// Grammar (whitespace insignificant, '^' right-associative):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | power
//   power  := primary ('^' factor)?
//   primary:= number | 'u' | 'v' | fn '(' expr ')' | '(' expr ')'
//   fn     := sin | cos | exp | log | sqrt
class Expr {
public:
    enum class Kind { Literal, VarU, VarV, Add, Sub, Mul, Div, Pow, IntPow, Neg, Fun };
    enum class Fn { Sin, Cos, Exp, Log, Sqrt };

    struct Node {
        Kind kind;
        double literal = 0.0;
        long long ipow = 0;
        Fn fn = Fn::Sin;
        std::shared_ptr<const Node> a, b;
    };

    Expr() = default;

    static Expr parse(std::string_view text);
    static Expr literal(double value);

    // Canonical text; parsing it back yields a structurally identical tree.
    std::string str() const;

    Jet2 eval(const Jet2& u, const Jet2& v) const;
    double eval(double u, double v) const;

    bool uses_u() const;
    bool uses_v() const;
    bool same_structure(const Expr& other) const;
    bool empty() const { return root_ == nullptr; }

    const std::shared_ptr<const Node>& root() const { return root_; }

private:
    explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;
};

}  // namespace frontal
