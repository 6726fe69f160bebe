#include "polycenter/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>

namespace polycenter::expr {

std::size_t Index::resolve(std::size_t n) const {
    const long m = static_cast<long>(n);
    const long v = (uses_n ? m : 0) + offset;
    return static_cast<std::size_t>((((v - 1) % m) + m) % m);
}

bool ParsedCenter::compatible(std::size_t n) const {
    if (n < 3) return false;
    return arity_policy == ArityPolicy::Fixed ? n == min_n : n >= min_n;
}

namespace {

enum class Tok { Number, Ident, LParen, RParen, Comma, Plus, Minus, Star, Slash, Caret, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
    double number = 0.0;
    bool integral = false;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            bool integral = true;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            if (i < src.size() && src[i] == '.') {
                integral = false;
                ++i;
                while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            }
            if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
                std::size_t k = i + 1;
                if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
                if (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
                    integral = false;
                    i = k;
                    while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
                }
            }
            std::string text(src.substr(start, i - start));
            if (text == ".") throw ParseError(ErrorKind::SyntaxError, "malformed number", start);
            Token t{Tok::Number, text, start};
            t.number = std::strtod(text.c_str(), nullptr);
            t.integral = integral;
            out.push_back(std::move(t));
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
            out.push_back({Tok::Ident, std::string(src.substr(start, i - start)), start});
            continue;
        }
        Tok kind;
        switch (c) {
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case ',': kind = Tok::Comma; break;
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '/': kind = Tok::Slash; break;
            case '^': kind = Tok::Caret; break;
            default:
                throw ParseError(ErrorKind::SyntaxError, std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({kind, std::string(1, c), start});
        ++i;
    }
    out.push_back({Tok::End, "", src.size()});
    return out;
}

NodePtr make(Op op, std::vector<NodePtr> args = {}) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->args = std::move(args);
    return n;
}

class Parser {
public:
    explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

    NodePtr parse_all() {
        auto e = expr();
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
        return e;
    }

    bool uses_n = false;
    bool has_literal_index = false;
    bool has_perimeter = false;
    long max_literal = 0;

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(ErrorKind::SyntaxError, msg, peek().pos);
    }
    void expect(Tok k, const char* what) {
        if (!accept(k)) fail(std::string("expected ") + what);
    }

    NodePtr expr() {
        auto lhs = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const Op op = take().kind == Tok::Plus ? Op::Add : Op::Sub;
            lhs = make(op, {lhs, term()});
        }
        return lhs;
    }

    NodePtr term() {
        auto lhs = unary();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            const Op op = take().kind == Tok::Star ? Op::Mul : Op::Div;
            lhs = make(op, {lhs, unary()});
        }
        return lhs;
    }

    NodePtr unary() {
        if (accept(Tok::Minus)) return make(Op::Negate, {unary()});
        return power();
    }

    NodePtr power() {
        auto base = primary();
        if (accept(Tok::Caret)) return make(Op::Pow, {base, unary()});
        return base;
    }

    NodePtr primary() {
        const Token& t = peek();
        if (t.kind == Tok::Number) {
            take();
            auto n = std::make_shared<Node>();
            n->op = Op::Constant;
            n->value = t.number;
            return n;
        }
        if (accept(Tok::LParen)) {
            auto e = expr();
            expect(Tok::RParen, "')'");
            return e;
        }
        if (t.kind != Tok::Ident) fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
        const std::size_t name_pos = t.pos;
        const std::string name = take().text;
        if (name == "d") return distance_term();
        if (name == "perim") {
            has_perimeter = true;
            if (accept(Tok::LParen)) expect(Tok::RParen, "')'");
            return make(Op::Perimeter);
        }
        if (name == "sqrt" || name == "abs") {
            expect(Tok::LParen, "'('");
            auto arg = expr();
            expect(Tok::RParen, "')'");
            return make(name == "sqrt" ? Op::Sqrt : Op::Abs, {arg});
        }
        if (name == "min" || name == "max") {
            expect(Tok::LParen, "'('");
            std::vector<NodePtr> args{expr()};
            while (accept(Tok::Comma)) args.push_back(expr());
            expect(Tok::RParen, "')'");
            return make(name == "min" ? Op::Min : Op::Max, std::move(args));
        }
        throw ParseError(ErrorKind::SyntaxError, "unknown identifier '" + name + "'", name_pos);
    }

    NodePtr distance_term() {
        expect(Tok::LParen, "'(' after d");
        const std::size_t first_pos = peek().pos;
        const Index a = index();
        expect(Tok::Comma, "','");
        const Index b = index();
        expect(Tok::RParen, "')'");
        if (a.offset == b.offset)
            throw ParseError(ErrorKind::IndexError, "d(i, i) is not a segment", first_pos);
        auto n = std::make_shared<Node>();
        n->op = Op::Distance;
        n->i = a;
        n->j = b;
        return n;
    }

    long integer() {
        const Token& t = peek();
        if (t.kind != Tok::Number || !t.integral) fail("expected an integer index");
        take();
        return std::strtol(t.text.c_str(), nullptr, 10);
    }

    Index index() {
        Index idx;
        const std::size_t start = peek().pos;
        if (peek().kind == Tok::Ident && peek().text == "n") {
            take();
            idx.uses_n = true;
            uses_n = true;
        } else {
            idx.offset = integer();
            if (idx.offset < 1) throw ParseError(ErrorKind::IndexError, "indices are 1-based", start);
        }
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool plus = take().kind == Tok::Plus;
            const long k = integer();
            idx.offset += plus ? k : -k;
        }
        if (!idx.uses_n) {
            if (idx.offset < 1) throw ParseError(ErrorKind::IndexError, "indices are 1-based", start);
            has_literal_index = true;
            max_literal = std::max(max_literal, idx.offset);
        }
        return idx;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

void format_index(std::string& out, const Index& idx) {
    if (!idx.uses_n) {
        out += std::to_string(idx.offset);
        return;
    }
    out += "n";
    if (idx.offset > 0) out += "+" + std::to_string(idx.offset);
    if (idx.offset < 0) out += "-" + std::to_string(-idx.offset);
}

void format(std::string& out, const Node& node) {
    auto binary = [&](const char* sym) {
        out += "(";
        format(out, *node.args[0]);
        out += sym;
        format(out, *node.args[1]);
        out += ")";
    };
    switch (node.op) {
        case Op::Constant: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", node.value);
            out += buf;
            return;
        }
        case Op::Distance:
            out += "d(";
            format_index(out, node.i);
            out += ", ";
            format_index(out, node.j);
            out += ")";
            return;
        case Op::Perimeter: out += "perim"; return;
        case Op::Negate:
            out += "(-";
            format(out, *node.args[0]);
            out += ")";
            return;
        case Op::Sqrt:
        case Op::Abs:
            out += node.op == Op::Sqrt ? "sqrt(" : "abs(";
            format(out, *node.args[0]);
            out += ")";
            return;
        case Op::Add: binary(" + "); return;
        case Op::Sub: binary(" - "); return;
        case Op::Mul: binary(" * "); return;
        case Op::Div: binary(" / "); return;
        case Op::Pow: binary(" ^ "); return;
        case Op::Min:
        case Op::Max:
            out += node.op == Op::Min ? "min(" : "max(";
            for (std::size_t k = 0; k < node.args.size(); ++k) {
                if (k) out += ", ";
                format(out, *node.args[k]);
            }
            out += ")";
            return;
    }
}

[[noreturn]] void eval_error(const std::string& msg) { throw Error(ErrorKind::EvalError, msg); }

double eval(const Node& node, const DistanceMatrix& d) {
    const std::size_t n = d.n();
    auto arg = [&](std::size_t k) { return eval(*node.args[k], d); };
    switch (node.op) {
        case Op::Constant: return node.value;
        case Op::Distance: {
            const std::size_t a = node.i.resolve(n);
            const std::size_t b = node.j.resolve(n);
            if (a == b) eval_error("indices of d(i, j) coincide for n = " + std::to_string(n));
            return d(a, b);
        }
        case Op::Perimeter: {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += d(k, (k + 1) % n);
            return s;
        }
        case Op::Negate: return -arg(0);
        case Op::Sqrt: {
            const double x = arg(0);
            if (x < 0.0) eval_error("square root of a negative number");
            return std::sqrt(x);
        }
        case Op::Abs: return std::abs(arg(0));
        case Op::Add: return arg(0) + arg(1);
        case Op::Sub: return arg(0) - arg(1);
        case Op::Mul: return arg(0) * arg(1);
        case Op::Div: {
            const double num = arg(0);
            const double den = arg(1);
            if (den == 0.0) eval_error("division by zero");
            return num / den;
        }
        case Op::Pow: {
            const double r = std::pow(arg(0), arg(1));
            if (!std::isfinite(r)) eval_error("power is not a finite real number");
            return r;
        }
        case Op::Min:
        case Op::Max: {
            double best = arg(0);
            for (std::size_t k = 1; k < node.args.size(); ++k)
                best = node.op == Op::Min ? std::min(best, arg(k)) : std::max(best, arg(k));
            return best;
        }
    }
    eval_error("unknown node");
}

}  // namespace

bool structurally_equal(const Node& a, const Node& b) {
    if (a.op != b.op || a.args.size() != b.args.size()) return false;
    if (a.op == Op::Constant && a.value != b.value) return false;
    if (a.op == Op::Distance && !(a.i == b.i && a.j == b.j)) return false;
    for (std::size_t k = 0; k < a.args.size(); ++k)
        if (!structurally_equal(*a.args[k], *b.args[k])) return false;
    return true;
}

std::string to_string(const Node& node) {
    std::string out;
    format(out, node);
    return out;
}

ParsedCenter parse(std::string_view source) {
    Parser parser(source);
    ParsedCenter pc;
    pc.expr = parser.parse_all();
    pc.source = std::string(source);
    const bool fixed = parser.has_literal_index && !parser.uses_n && !parser.has_perimeter;
    pc.arity_policy = fixed ? ArityPolicy::Fixed : ArityPolicy::Generic;
    pc.min_n = static_cast<std::size_t>(std::max(3L, parser.max_literal));
    return pc;
}

double evaluate(const ParsedCenter& pc, const DistanceMatrix& d) {
    if (!pc.compatible(d.n()))
        throw Error(ErrorKind::DomainViolation,
                    "expression '" + pc.source + "' is not defined for n = " + std::to_string(d.n()));
    return eval(*pc.expr, d);
}

LengthCenterFunction to_center_function(const ParsedCenter& pc) {
    const std::string description =
        pc.arity_policy == ArityPolicy::Fixed ? std::to_string(pc.min_n) + "-gon"
                                              : "polygon with at least " + std::to_string(pc.min_n) + " vertices";
    return LengthCenterFunction(
        pc.source, [pc](const DistanceMatrix& d) { return eval(*pc.expr, d); },
        {description, [pc](const DistanceMatrix& d) { return pc.compatible(d.n()); }});
}

Admission admit(const ParsedCenter& pc, std::size_t n, std::uint64_t seed, std::size_t trials) {
    if (!pc.compatible(n))
        throw Error(ErrorKind::DomainViolation,
                    "expression '" + pc.source + "' is not defined for n = " + std::to_string(n));
    auto g = to_center_function(pc);
    auto report = verify_axioms(g, simple_sampler(n), trials, seed);
    if (!report.ok())
        throw AxiomViolation("expression '" + pc.source + "' violates the " + *report.failed_property + " property",
                             std::move(report));
    return {std::move(g), std::move(report)};
}

}  // namespace polycenter::expr
