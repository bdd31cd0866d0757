#pragma once

#include <complex>
#include <cstdint>
#include <optional>

namespace ctori::modular {

/// A point of the upper half plane.
struct Tau {
    double re = 0.0;
    double im = 1.0;

    std::complex<double> value() const noexcept { return {re, im}; }
    friend bool operator==(const Tau&, const Tau&) = default;
};

/// Throws ErrorKind::domain unless im > 0 and both parts are finite.
Tau make_tau(double re, double im);

/// Integer 2x2 matrix (a b; c d) with a*d - b*c == 1.
class Unimodular {
public:
    /// Identity.
    constexpr Unimodular() noexcept = default;
    /// Throws ErrorKind::domain if the determinant is not exactly 1.
    Unimodular(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    static constexpr Unimodular identity() noexcept { return {}; }
    static Unimodular S() { return {0, -1, 1, 0}; }
    static Unimodular T(std::int64_t n = 1) { return {1, n, 0, 1}; }

    std::int64_t a() const noexcept { return a_; }
    std::int64_t b() const noexcept { return b_; }
    std::int64_t c() const noexcept { return c_; }
    std::int64_t d() const noexcept { return d_; }

    Unimodular inverse() const { return {d_, -b_, -c_, a_}; }

    /// Matrix product; throws ErrorKind::overflow when an entry leaves int64.
    friend Unimodular operator*(const Unimodular& lhs, const Unimodular& rhs);
    friend bool operator==(const Unimodular&, const Unimodular&) = default;

private:
    std::int64_t a_ = 1, b_ = 0, c_ = 0, d_ = 1;
};

/// (a*tau + b) / (c*tau + d).
Tau mobius_apply(const Unimodular& m, const Tau& t);

/// Tolerance used when deciding whether a point sits on the unit-circle arc.
inline constexpr double kArcTolerance = 1e-12;
inline constexpr double kDefaultEquivalenceTol = 1e-9;
inline constexpr int kMaxReductionSteps = 10000;

/// Canonical fundamental domain: -1/2 < re <= 1/2, |tau| >= 1, re >= 0 on the arc.
bool in_fundamental_domain(const Tau& t, double tol = kArcTolerance);

struct ReducedTau {
    Tau tau;
    Unimodular witness;  // mobius_apply(witness, input) == tau
};

/// Reduces t into the canonical fundamental domain, tracking the SL(2,Z) word.
ReducedTau reduce_to_fundamental(const Tau& t);

struct Equivalence {
    bool equivalent = false;
    /// Maps the first argument to the second; present only when equivalent.
    std::optional<Unimodular> witness;
};

Equivalence is_equivalent(const Tau& t1, const Tau& t2, double tol = kDefaultEquivalenceTol);

/// Klein j-invariant via E4^3 / Delta on the reduced point.
std::complex<double> j_invariant(const Tau& t);

}  // namespace ctori::modular
