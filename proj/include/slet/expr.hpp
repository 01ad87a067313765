#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "slet/jet.hpp"

namespace slet {

using ParamMap = std::map<std::string, double>;

enum class Func { ln, exp, sqrt, sin, cos };

std::string_view func_name(Func f);

/// Immutable expression tree in the single radial variable `r`.
///
/// Grammar, loosest to tightest binding:
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary (('^' | '**') unary)?        right-associative
///   primary := number | 'r' | param | func '(' expr ')' | '(' expr ')'
/// Whitespace is insignificant. Parameter names are case-sensitive identifiers.
class Expr {
public:
    enum class Kind { number, variable, param, neg, add, sub, mul, div, pow, call };

    struct Node {
        Kind kind;
        double number = 0.0;
        std::string name;  // parameter name
        Func func = Func::ln;
        std::shared_ptr<const Node> lhs, rhs;  // rhs unused for unary nodes
        std::size_t offset = 0;                // byte offset in the source text
    };

    /// Throws ParseError (with byte offset) on lexical/syntax errors and unknown functions.
    static Expr parse(std::string_view src);

    /// Fully parenthesized text that parses back to a structurally equal tree.
    std::string to_string() const;

    /// Names of all parameters referenced, excluding `r`.
    std::set<std::string> parameters() const;

    /// Throws ParseError naming the first parameter absent from `params`.
    void check_bound(const ParamMap& params) const;

    Jet eval(const Jet& r, const ParamMap& params) const;
    double eval(double r, const ParamMap& params) const;

    const Node& root() const { return *root_; }

    /// Structural equality; source offsets are ignored.
    friend bool operator==(const Expr& a, const Expr& b);

private:
    explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;
};

}  // namespace slet
