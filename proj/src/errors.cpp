#include "ctori/errors.hpp"

namespace ctori {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::domain: return "domain";
        case ErrorKind::validation: return "validation";
        case ErrorKind::parse: return "parse";
        case ErrorKind::evaluation_failure: return "evaluation_failure";
        case ErrorKind::no_convergence: return "no_convergence";
        case ErrorKind::divergence: return "divergence";
        case ErrorKind::bracket: return "bracket";
        case ErrorKind::reduction_failure: return "reduction_failure";
        case ErrorKind::overflow: return "overflow";
        case ErrorKind::degenerate_curve: return "degenerate_curve";
        case ErrorKind::lift_diverged: return "lift_diverged";
        case ErrorKind::io: return "io";
    }
    return "unknown";
}

int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::domain:
        case ErrorKind::validation:
        case ErrorKind::parse:
        case ErrorKind::degenerate_curve:
            return 2;
        case ErrorKind::io:
            return 4;
        default:
            return 3;
    }
}

}  // namespace ctori
