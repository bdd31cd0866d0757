#include "ctori/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ctori/errors.hpp"

namespace ctori::numerics {

namespace {

struct SimpsonState {
    const ScalarFunction& f;
    double total_width;
    double tol;
    int max_depth;
    std::size_t evaluations = 0;
    double error_sum = 0.0;

    double eval(double x) {
        const double y = f(x);
        ++evaluations;
        if (!std::isfinite(y)) {
            throw Error(ErrorKind::evaluation_failure,
                        "integrand is not finite at x = " + std::to_string(x));
        }
        return y;
    }

    // Simpson estimate `whole` on [a,b] with endpoint/midpoint samples fa, fm, fb.
    double refine(double a, double b, double fa, double fm, double fb, double whole,
                  int depth) {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = eval(lm);
        const double frm = eval(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        const double local_tol = tol * (b - a) / total_width;
        if (std::abs(delta) <= 15.0 * local_tol) {
            error_sum += std::abs(delta) / 15.0;
            return left + right + delta / 15.0;
        }
        if (depth >= max_depth) {
            throw Error(ErrorKind::no_convergence,
                        "adaptive Simpson exceeded the recursion depth cap of " +
                            std::to_string(max_depth));
        }
        return refine(a, m, fa, flm, fm, left, depth + 1) +
               refine(m, b, fm, frm, fb, right, depth + 1);
    }
};

}  // namespace

QuadratureResult integrate(const ScalarFunction& f, double lo, double hi, double tol,
                           int max_depth) {
    if (!(lo <= hi)) {
        throw Error(ErrorKind::domain, "integration bounds must satisfy lo <= hi", "lo");
    }
    if (!(tol > 0.0)) {
        throw Error(ErrorKind::domain, "quadrature tolerance must be positive", "tol");
    }
    SimpsonState state{f, hi - lo, tol, max_depth};
    const double fa = state.eval(lo);
    if (lo == hi) {
        return {0.0, 0.0, state.evaluations};
    }
    const double fb = state.eval(hi);
    const double fm = state.eval(0.5 * (lo + hi));
    const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    const double value = state.refine(lo, hi, fa, fm, fb, whole, 0);
    return {value, state.error_sum, state.evaluations};
}

namespace {

void require_finite(std::span<const double> y, double t) {
    for (double v : y) {
        if (!std::isfinite(v)) {
            throw Error(ErrorKind::divergence,
                        "non-finite state encountered at t = " + std::to_string(t));
        }
    }
}

void axpy(std::vector<double>& out, std::span<const double> y, double h,
          const std::vector<double>& k) {
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = y[i] + h * k[i];
}

}  // namespace

Trajectory solve_ivp(const VectorField& field, std::span<const double> y0, double t0,
                     double t1, std::size_t steps) {
    if (steps < 1) throw Error(ErrorKind::domain, "solve_ivp needs at least one step", "steps");
    if (!(t1 > t0)) throw Error(ErrorKind::domain, "solve_ivp needs t1 > t0", "t1");
    if (y0.empty()) throw Error(ErrorKind::domain, "initial state is empty", "y0");
    require_finite(y0, t0);

    const std::size_t dim = y0.size();
    const double h = (t1 - t0) / static_cast<double>(steps);

    Trajectory out;
    out.times.reserve(steps + 1);
    out.states.reserve(steps + 1);
    out.times.push_back(t0);
    out.states.emplace_back(y0.begin(), y0.end());

    std::vector<double> y(y0.begin(), y0.end());
    std::vector<double> tmp(dim);
    auto call = [&](double t, std::span<const double> state) {
        auto k = field(t, state);
        if (k.size() != dim) {
            throw Error(ErrorKind::domain, "vector field returned wrong dimension", "field");
        }
        require_finite(k, t);
        return k;
    };

    for (std::size_t n = 0; n < steps; ++n) {
        const double t = t0 + static_cast<double>(n) * h;
        const auto k1 = call(t, y);
        axpy(tmp, y, 0.5 * h, k1);
        const auto k2 = call(t + 0.5 * h, tmp);
        axpy(tmp, y, 0.5 * h, k2);
        const auto k3 = call(t + 0.5 * h, tmp);
        axpy(tmp, y, h, k3);
        const auto k4 = call(t + h, tmp);
        for (std::size_t i = 0; i < dim; ++i) {
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        const double t_next = (n + 1 == steps) ? t1 : t0 + static_cast<double>(n + 1) * h;
        require_finite(y, t_next);
        out.times.push_back(t_next);
        out.states.push_back(y);
    }
    return out;
}

double invert_monotone(const ScalarFunction& f, double target, double lo, double hi,
                       double tol, const ScalarFunction& derivative) {
    if (!(lo <= hi)) throw Error(ErrorKind::bracket, "inversion bracket must satisfy lo <= hi");
    if (!(tol > 0.0)) throw Error(ErrorKind::domain, "inversion tolerance must be positive", "tol");

    double f_lo = f(lo) - target;
    double f_hi = f(hi) - target;
    if (!std::isfinite(f_lo) || !std::isfinite(f_hi)) {
        throw Error(ErrorKind::evaluation_failure, "function is not finite at the bracket ends");
    }
    if (std::abs(f_lo) <= tol) return lo;
    if (std::abs(f_hi) <= tol) return hi;
    if (f_lo > 0.0 || f_hi < 0.0) {
        throw Error(ErrorKind::bracket, "target " + std::to_string(target) +
                                            " lies outside [f(lo), f(hi)]");
    }

    // Initial guess by linear interpolation across the bracket.
    double x = lo - f_lo * (hi - lo) / (f_hi - f_lo);
    double x_prev = lo;
    double g_prev = f_lo;
    double width_before = hi - lo;

    for (int iter = 0; iter < 200; ++iter) {
        if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
        const double g = f(x) - target;
        if (!std::isfinite(g)) {
            throw Error(ErrorKind::evaluation_failure, "function is not finite inside the bracket");
        }
        if (std::abs(g) <= tol) return x;
        if (g < 0.0) {
            lo = x;
        } else {
            hi = x;
        }
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) {
            break;
        }

        double next;
        if (derivative) {
            const double slope = derivative(x);
            next = (slope > 0.0 && std::isfinite(slope)) ? x - g / slope : 0.5 * (lo + hi);
        } else {
            const double slope = (g - g_prev) / (x - x_prev);
            next = (slope > 0.0 && std::isfinite(slope)) ? x - g / slope : 0.5 * (lo + hi);
        }
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        // Every second step the bracket must have halved, else bisect.
        if (iter % 2 == 1) {
            const double width = hi - lo;
            if (width > 0.5 * width_before) next = 0.5 * (lo + hi);
            width_before = width;
        }
        x_prev = x;
        g_prev = g;
        x = next;
    }

    const double mid = 0.5 * (lo + hi);
    if (std::abs(f(mid) - target) <= tol) return mid;
    throw Error(ErrorKind::no_convergence, "monotone inversion did not reach tolerance");
}

}  // namespace ctori::numerics
