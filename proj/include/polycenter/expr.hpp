#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "polycenter/center_function.hpp"
#include "polycenter/error.hpp"

namespace polycenter::expr {

// Grammar (whitespace between tokens is ignored):
//
//   expr    = term { ("+" | "-") term } ;
//   term    = unary { ("*" | "/") unary } ;
//   unary   = "-" unary | power ;
//   power   = primary [ "^" unary ] ;                 (right associative)
//   primary = number
//           | "d" "(" index "," index ")"
//           | "perim" [ "(" ")" ]
//           | ("sqrt" | "abs") "(" expr ")"
//           | ("min" | "max") "(" expr { "," expr } ")"
//           | "(" expr ")" ;
//   index   = ( integer | "n" ) { ("+" | "-") integer } ;
//   number  = digits [ "." digits ] [ ("e" | "E") [ "+" | "-" ] digits ] ;
//
// Indices are 1-based and reduced mod n into 1..n at evaluation time, so
// d(n, 1) is the closing side and d(n+1, 2) = d(1, 2). perim is the sum of
// the n side lengths.

// Symbolic index a*n + offset, a in {0, 1}.
struct Index {
    bool uses_n = false;
    long offset = 0;

    std::size_t resolve(std::size_t n) const;  // 0-based
    friend bool operator==(const Index&, const Index&) = default;
};

enum class Op { Constant, Distance, Perimeter, Negate, Sqrt, Abs, Add, Sub, Mul, Div, Pow, Min, Max };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    Op op = Op::Constant;
    double value = 0.0;
    Index i{}, j{};
    std::vector<NodePtr> args;
};

bool structurally_equal(const Node& a, const Node& b);

// Fully parenthesized text that parses back to an equal tree.
std::string to_string(const Node& node);

enum class ArityPolicy {
    Generic,  // mentions n or perim: valid for every n >= min_n
    Fixed,    // literal indices only: valid for n == min_n
};

struct ParsedCenter {
    NodePtr expr;
    std::string source;
    ArityPolicy arity_policy = ArityPolicy::Fixed;
    std::size_t min_n = 3;

    bool compatible(std::size_t n) const;
};

class ParseError : public Error {
public:
    ParseError(ErrorKind kind, const std::string& message, std::size_t position)
        : Error(kind, message + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Throws ParseError with kind SyntaxError, or IndexError for d(i, i).
ParsedCenter parse(std::string_view source);

// Throws DomainViolation for an incompatible n, EvalError for division by
// zero, square roots of negatives, non-finite powers and indices that
// coincide for this n.
double evaluate(const ParsedCenter& pc, const DistanceMatrix& d);

LengthCenterFunction to_center_function(const ParsedCenter& pc);

class AxiomViolation : public Error {
public:
    AxiomViolation(const std::string& message, AxiomReport report)
        : Error(ErrorKind::AxiomViolation, message), report_(std::move(report)) {}
    const AxiomReport& report() const noexcept { return report_; }
    const std::string& property() const { return *report_.failed_property; }
    const std::optional<Polygon>& witness() const { return report_.witness; }

private:
    AxiomReport report_;
};

struct Admission {
    LengthCenterFunction function;
    AxiomReport report;
};

// Checks sigma-symmetry and homogeneity on distance matrices measured from
// random simple n-gons. Throws AxiomViolation naming the failed property and
// a witness polygon.
Admission admit(const ParsedCenter& pc, std::size_t n, std::uint64_t seed, std::size_t trials = 64);

}  // namespace polycenter::expr
