#pragma once

// Independent reference computations for the unit and acceptance suites.
// Nothing here calls into the library paths being checked.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "ctori/modular.hpp"

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;

/// Composite trapezoid rule with n panels.
inline double trapezoid(const std::function<double(double)>& f, double lo, double hi,
                        std::size_t n) {
    const double h = (hi - lo) / static_cast<double>(n);
    double sum = 0.5 * (f(lo) + f(hi));
    for (std::size_t k = 1; k < n; ++k) sum += f(lo + h * static_cast<double>(k));
    return sum * h;
}

/// Antiderivative of 1/(a + cos x) on (-pi, pi), extended by periodicity.
inline double F_closed_form(double a, double phi) {
    const double w = 2.0 * kPi / std::sqrt(a * a - 1.0);
    const double turns = std::floor((phi + kPi) / (2.0 * kPi));
    const double psi = phi - 2.0 * kPi * turns;  // in [-pi, pi)
    const double c = std::sqrt((a - 1.0) / (a + 1.0));
    return turns * w + 2.0 / std::sqrt(a * a - 1.0) * std::atan(c * std::tan(0.5 * psi));
}

/// Klein j via 1728 E4^3 / (E4^3 - E6^2) with a fixed 50-term series, at the
/// raw point (no reduction).
inline std::complex<double> j_eisenstein(std::complex<double> tau) {
    using cd = std::complex<double>;
    const cd q = std::exp(cd(0.0, 2.0 * kPi) * tau);
    cd e4(1.0, 0.0), e6(1.0, 0.0), qn(1.0, 0.0);
    for (int n = 1; n <= 50; ++n) {
        qn *= q;
        double s3 = 0.0, s5 = 0.0;
        for (int d = 1; d <= n; ++d) {
            if (n % d == 0) {
                s3 += std::pow(d, 3);
                s5 += std::pow(d, 5);
            }
        }
        e4 += 240.0 * s3 * qn;
        e6 -= 504.0 * s5 * qn;
    }
    const cd e43 = e4 * e4 * e4;
    return 1728.0 * e43 / (e43 - e6 * e6);
}

struct Matrix {
    std::int64_t a, b, c, d;
};

/// Brute-force search over SL(2,Z) matrices with entries |x| <= bound for one
/// mapping t1 to t2 within tol.
inline std::optional<Matrix> find_witness(std::complex<double> t1, std::complex<double> t2,
                                          int bound, double tol) {
    for (int a = -bound; a <= bound; ++a)
        for (int b = -bound; b <= bound; ++b)
            for (int c = -bound; c <= bound; ++c)
                for (int d = -bound; d <= bound; ++d) {
                    if (a * d - b * c != 1) continue;
                    const std::complex<double> img =
                        (static_cast<double>(a) * t1 + static_cast<double>(b)) /
                        (static_cast<double>(c) * t1 + static_cast<double>(d));
                    if (std::abs(img - t2) < tol) return Matrix{a, b, c, d};
                }
    return std::nullopt;
}

/// Random unimodular matrix as a product of `length` generators S, T, T^-1.
inline ctori::modular::Unimodular random_unimodular(std::mt19937_64& rng, int length) {
    using ctori::modular::Unimodular;
    std::uniform_int_distribution<int> pick(0, 2);
    Unimodular m;
    for (int k = 0; k < length; ++k) {
        switch (pick(rng)) {
            case 0: m = Unimodular::S() * m; break;
            case 1: m = Unimodular::T(1) * m; break;
            default: m = Unimodular::T(-1) * m; break;
        }
    }
    return m;
}

/// Area enclosed around the point -1 by the curve with angular radius alpha(s):
/// integral over s of (1 - cos alpha(s)).
inline double polar_cap_area(const std::function<double(double)>& alpha, std::size_t n) {
    return trapezoid([&](double s) { return 1.0 - std::cos(alpha(s)); }, 0.0, 2.0 * kPi, n);
}

/// Length of the same curve: integral of sqrt(alpha'^2 + sin^2 alpha).
inline double polar_curve_length(const std::function<double(double)>& alpha,
                                 const std::function<double(double)>& dalpha, std::size_t n) {
    return trapezoid(
        [&](double s) {
            const double sa = std::sin(alpha(s));
            return std::sqrt(dalpha(s) * dalpha(s) + sa * sa);
        },
        0.0, 2.0 * kPi, n);
}

}  // namespace oracle
