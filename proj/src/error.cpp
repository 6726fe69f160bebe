#include "polycenter/error.hpp"

namespace polycenter {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::DomainViolation: return "DomainViolation";
        case ErrorKind::AllZero: return "AllZero";
        case ErrorKind::ZeroSum: return "ZeroSum";
        case ErrorKind::InfeasibleDistances: return "InfeasibleDistances";
        case ErrorKind::ZeroArea: return "ZeroArea";
        case ErrorKind::Tie: return "Tie";
        case ErrorKind::Collinear: return "Collinear";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::DegenerateVertex: return "DegenerateVertex";
        case ErrorKind::ParityMismatch: return "ParityMismatch";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::IndexError: return "IndexError";
        case ErrorKind::EvalError: return "EvalError";
        case ErrorKind::AxiomViolation: return "AxiomViolation";
    }
    return "Unknown";
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput:
        case ErrorKind::SyntaxError:
        case ErrorKind::IndexError:
            return 2;
        case ErrorKind::AllZero:
        case ErrorKind::ZeroSum:
            return 4;
        case ErrorKind::NoConvergence:
            return 5;
        default:
            return 3;
    }
}

}  // namespace polycenter
