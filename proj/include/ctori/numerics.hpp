#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace ctori::numerics {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

inline constexpr double kDefaultQuadratureTol = 1e-12;
inline constexpr double kDefaultInversionTol = 1e-12;
inline constexpr int kDefaultMaxDepth = 60;
/// RK4 steps per 2*pi of parameter.
inline constexpr std::size_t kDefaultStepsPerTurn = 4096;

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

using ScalarFunction = std::function<double(double)>;

/// Adaptive Simpson quadrature of f over [lo, hi].
///
/// Intervals are bisected until the Richardson difference of the two Simpson
/// estimates drops below 15 * tol * (width / total width). Throws
/// ErrorKind::evaluation_failure on a non-finite sample and
/// ErrorKind::no_convergence once max_depth bisections are exceeded.
QuadratureResult integrate(const ScalarFunction& f, double lo, double hi,
                           double tol = kDefaultQuadratureTol,
                           int max_depth = kDefaultMaxDepth);

/// Samples of an ODE solution. times strictly increasing, one state per time.
struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;

    std::size_t size() const noexcept { return times.size(); }
    std::size_t dimension() const noexcept { return states.empty() ? 0 : states.front().size(); }
    const std::vector<double>& final_state() const { return states.back(); }
};

using VectorField = std::function<std::vector<double>(double, std::span<const double>)>;

/// Classical fixed-step RK4 from t0 to t1; returns steps + 1 samples.
Trajectory solve_ivp(const VectorField& field, std::span<const double> y0, double t0,
                     double t1, std::size_t steps);

/// Solves f(x) = target for f strictly increasing on [lo, hi].
///
/// Newton steps (secant steps when no derivative is supplied) are accepted
/// only while they stay inside the shrinking bracket; otherwise the step
/// bisects.
double invert_monotone(const ScalarFunction& f, double target, double lo, double hi,
                       double tol = kDefaultInversionTol,
                       const ScalarFunction& derivative = {});

}  // namespace ctori::numerics
