#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polycenter {

enum class ErrorKind {
    InvalidInput,
    DomainViolation,
    AllZero,
    ZeroSum,
    InfeasibleDistances,
    ZeroArea,
    Tie,
    Collinear,
    NoConvergence,
    DegenerateVertex,
    ParityMismatch,
    SyntaxError,
    IndexError,
    EvalError,
    AxiomViolation,
};

std::string_view to_string(ErrorKind kind);

// Process exit status used by the command-line tool for each error kind.
//   2  input or parse error
//   3  domain violation (the input is well formed but outside the domain)
//   4  coordinate map undefined or not normalizable
//   5  numeric non-convergence
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace polycenter
