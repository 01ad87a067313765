#include "slet/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

#include "slet/errors.hpp"

namespace slet {

std::string_view func_name(Func f) {
    switch (f) {
        case Func::ln: return "ln";
        case Func::exp: return "exp";
        case Func::sqrt: return "sqrt";
        case Func::sin: return "sin";
        case Func::cos: return "cos";
    }
    return "?";
}

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok type;
    std::size_t offset;
    std::string_view text;
    double number = 0.0;
};

std::string describe(const Token& t) {
    if (t.type == Tok::end) return "end of input";
    return "'" + std::string(t.text) + "'";
}

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto is_ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto is_ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            if (i < src.size() && src[i] == '.') {
                ++i;
                while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            }
            if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
                std::size_t j = i + 1;
                if (j < src.size() && (src[j] == '+' || src[j] == '-')) ++j;
                if (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                    i = j;
                    while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
                }
            }
            Token t{Tok::number, start, src.substr(start, i - start)};
            auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.number);
            if (ec != std::errc() || p != t.text.data() + t.text.size() || !std::isfinite(t.number))
                throw ParseError("malformed number '" + std::string(t.text) + "'", start);
            out.push_back(t);
            continue;
        }
        if (is_ident_start(c)) {
            while (i < src.size() && is_ident_char(src[i])) ++i;
            out.push_back({Tok::ident, start, src.substr(start, i - start)});
            continue;
        }
        Tok type;
        std::size_t len = 1;
        switch (c) {
            case '+': type = Tok::plus; break;
            case '-': type = Tok::minus; break;
            case '*':
                if (i + 1 < src.size() && src[i + 1] == '*') {
                    type = Tok::caret;
                    len = 2;
                } else {
                    type = Tok::star;
                }
                break;
            case '/': type = Tok::slash; break;
            case '^': type = Tok::caret; break;
            case '(': type = Tok::lparen; break;
            case ')': type = Tok::rparen; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        i += len;
        out.push_back({type, start, src.substr(start, len)});
    }
    out.push_back({Tok::end, src.size(), {}});
    return out;
}

bool lookup_func(std::string_view name, Func& f) {
    for (Func g : {Func::ln, Func::exp, Func::sqrt, Func::sin, Func::cos}) {
        if (func_name(g) == name) {
            f = g;
            return true;
        }
    }
    return false;
}

NodePtr make(Expr::Kind k, std::size_t off, NodePtr lhs = {}, NodePtr rhs = {}) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = k;
    n->offset = off;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    NodePtr parse_all() {
        NodePtr e = expr();
        if (peek().type != Tok::end) throw ParseError("unexpected " + describe(peek()), peek().offset);
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    NodePtr expr() {
        NodePtr lhs = term();
        while (peek().type == Tok::plus || peek().type == Tok::minus) {
            const Token& op = next();
            lhs = make(op.type == Tok::plus ? Expr::Kind::add : Expr::Kind::sub, op.offset, lhs, term());
        }
        return lhs;
    }

    NodePtr term() {
        NodePtr lhs = unary();
        while (peek().type == Tok::star || peek().type == Tok::slash) {
            const Token& op = next();
            lhs = make(op.type == Tok::star ? Expr::Kind::mul : Expr::Kind::div, op.offset, lhs, unary());
        }
        return lhs;
    }

    NodePtr unary() {
        if (peek().type == Tok::minus) {
            const Token& op = next();
            return make(Expr::Kind::neg, op.offset, unary());
        }
        if (peek().type == Tok::plus) {
            next();
            return unary();
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (peek().type == Tok::caret) {
            const Token& op = next();
            return make(Expr::Kind::pow, op.offset, base, unary());
        }
        return base;
    }

    NodePtr primary() {
        const Token& t = next();
        switch (t.type) {
            case Tok::number: {
                auto n = make(Expr::Kind::number, t.offset);
                std::const_pointer_cast<Expr::Node>(n)->number = t.number;
                return n;
            }
            case Tok::ident: {
                Func f;
                if (peek().type == Tok::lparen) {
                    if (!lookup_func(t.text, f))
                        throw ParseError("unknown function '" + std::string(t.text) + "'", t.offset);
                    next();
                    NodePtr arg = expr();
                    expect_rparen();
                    auto n = make(Expr::Kind::call, t.offset, arg);
                    std::const_pointer_cast<Expr::Node>(n)->func = f;
                    return n;
                }
                if (lookup_func(t.text, f))
                    throw ParseError("function '" + std::string(t.text) + "' requires an argument", t.offset);
                if (t.text == "r") return make(Expr::Kind::variable, t.offset);
                auto n = make(Expr::Kind::param, t.offset);
                std::const_pointer_cast<Expr::Node>(n)->name = std::string(t.text);
                return n;
            }
            case Tok::lparen: {
                NodePtr e = expr();
                expect_rparen();
                return e;
            }
            default: throw ParseError("unexpected " + describe(t), t.offset);
        }
    }

    void expect_rparen() {
        if (peek().type != Tok::rparen) throw ParseError("expected ')' but found " + describe(peek()), peek().offset);
        next();
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

const char* op_symbol(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::add: return " + ";
        case Expr::Kind::sub: return " - ";
        case Expr::Kind::mul: return "*";
        case Expr::Kind::div: return "/";
        case Expr::Kind::pow: return "^";
        default: return "?";
    }
}

void print(const Expr::Node& n, std::string& out) {
    switch (n.kind) {
        case Expr::Kind::number: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", n.number);
            out += buf;
            return;
        }
        case Expr::Kind::variable: out += 'r'; return;
        case Expr::Kind::param: out += n.name; return;
        case Expr::Kind::neg:
            out += "(-";
            print(*n.lhs, out);
            out += ')';
            return;
        case Expr::Kind::call:
            out += func_name(n.func);
            out += '(';
            print(*n.lhs, out);
            out += ')';
            return;
        default:
            out += '(';
            print(*n.lhs, out);
            out += op_symbol(n.kind);
            print(*n.rhs, out);
            out += ')';
    }
}

void collect(const Expr::Node& n, std::set<std::string>& names) {
    if (n.kind == Expr::Kind::param) names.insert(n.name);
    if (n.lhs) collect(*n.lhs, names);
    if (n.rhs) collect(*n.rhs, names);
}

const Expr::Node* first_unbound(const Expr::Node& n, const ParamMap& params) {
    if (n.kind == Expr::Kind::param && !params.count(n.name)) return &n;
    if (n.lhs)
        if (auto* u = first_unbound(*n.lhs, params)) return u;
    if (n.rhs)
        if (auto* u = first_unbound(*n.rhs, params)) return u;
    return nullptr;
}

bool equal(const Expr::Node& a, const Expr::Node& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expr::Kind::number: return a.number == b.number;
        case Expr::Kind::variable: return true;
        case Expr::Kind::param: return a.name == b.name;
        case Expr::Kind::neg: return equal(*a.lhs, *b.lhs);
        case Expr::Kind::call: return a.func == b.func && equal(*a.lhs, *b.lhs);
        default: return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
    }
}

Jet lift(double v, const Jet*) { return Jet::constant(v); }
double lift(double v, const double*) { return v; }

Jet apply(Func f, const Jet& a) {
    switch (f) {
        case Func::ln: return log(a);
        case Func::exp: return exp(a);
        case Func::sqrt: return sqrt(a);
        case Func::sin: return sin(a);
        case Func::cos: return cos(a);
    }
    return a;
}

double apply(Func f, double a) {
    switch (f) {
        case Func::ln:
            if (!(a > 0.0)) throw SingularityError("ln: argument outside domain");
            return std::log(a);
        case Func::exp: return std::exp(a);
        case Func::sqrt:
            if (!(a >= 0.0)) throw SingularityError("sqrt: argument outside domain");
            return std::sqrt(a);
        case Func::sin: return std::sin(a);
        case Func::cos: return std::cos(a);
    }
    return a;
}

double power(double a, double b) {
    if (b != std::trunc(b) && !(a > 0.0)) throw SingularityError("pow: argument outside domain");
    return std::pow(a, b);
}

Jet power(const Jet& a, const Jet& b) { return pow(a, b); }

double divide(double a, double b) {
    if (b == 0.0) throw SingularityError("division: divisor value is zero");
    return a / b;
}

Jet divide(const Jet& a, const Jet& b) { return a / b; }

template <class T>
T eval_node(const Expr::Node& n, const T& r, const ParamMap& params) {
    constexpr const T* tag = nullptr;
    switch (n.kind) {
        case Expr::Kind::number: return lift(n.number, tag);
        case Expr::Kind::variable: return r;
        case Expr::Kind::param: {
            auto it = params.find(n.name);
            if (it == params.end()) throw ParseError("unknown identifier '" + n.name + "'", n.offset);
            return lift(it->second, tag);
        }
        case Expr::Kind::neg: return -eval_node(*n.lhs, r, params);
        case Expr::Kind::add: return eval_node(*n.lhs, r, params) + eval_node(*n.rhs, r, params);
        case Expr::Kind::sub: return eval_node(*n.lhs, r, params) - eval_node(*n.rhs, r, params);
        case Expr::Kind::mul: return eval_node(*n.lhs, r, params) * eval_node(*n.rhs, r, params);
        case Expr::Kind::div: return divide(eval_node(*n.lhs, r, params), eval_node(*n.rhs, r, params));
        case Expr::Kind::pow: return power(eval_node(*n.lhs, r, params), eval_node(*n.rhs, r, params));
        case Expr::Kind::call: return apply(n.func, eval_node(*n.lhs, r, params));
    }
    throw NumericError("corrupt expression tree");
}

}  // namespace

Expr Expr::parse(std::string_view src) {
    auto toks = lex(src);
    if (toks.size() == 1) throw ParseError("empty expression", 0);
    return Expr(Parser(std::move(toks)).parse_all());
}

std::string Expr::to_string() const {
    std::string out;
    print(*root_, out);
    return out;
}

std::set<std::string> Expr::parameters() const {
    std::set<std::string> names;
    collect(*root_, names);
    return names;
}

void Expr::check_bound(const ParamMap& params) const {
    if (auto* u = first_unbound(*root_, params)) throw ParseError("unknown identifier '" + u->name + "'", u->offset);
}

Jet Expr::eval(const Jet& r, const ParamMap& params) const { return eval_node(*root_, r, params); }

double Expr::eval(double r, const ParamMap& params) const { return eval_node(*root_, r, params); }

bool operator==(const Expr& a, const Expr& b) { return equal(*a.root_, *b.root_); }

}  // namespace slet
