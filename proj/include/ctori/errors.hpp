#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ctori {

enum class ErrorKind {
    domain,              // parameter outside the admissible region
    validation,          // malformed user data (curve files, job specs)
    parse,               // unreadable input syntax
    evaluation_failure,  // integrand or field returned a non-finite value
    no_convergence,      // iteration or recursion cap exhausted
    divergence,          // ODE state became non-finite
    bracket,             // root target outside the bracketing interval
    reduction_failure,   // SL(2,Z) reduction did not terminate
    overflow,            // witness matrix entry left 64-bit range
    degenerate_curve,    // zero-length or antipodal segment
    lift_diverged,       // horizontal lift drifted off its base curve
    io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Process exit status for an error kind: 2 validation, 3 numerical, 4 I/O.
int exit_code(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::string field = {})
        : std::runtime_error(message), kind_(kind), field_(std::move(field)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& field() const noexcept { return field_; }

private:
    ErrorKind kind_;
    std::string field_;
};

}  // namespace ctori
