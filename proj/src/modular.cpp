#include "ctori/modular.hpp"

#include <array>
#include <cmath>
#include <string>

#include "ctori/errors.hpp"
#include "ctori/numerics.hpp"

namespace ctori::modular {

Tau make_tau(double re, double im) {
    if (!std::isfinite(re) || !std::isfinite(im)) {
        throw Error(ErrorKind::domain, "tau must be finite", "tau");
    }
    if (!(im > 0.0)) {
        throw Error(ErrorKind::domain, "tau must lie in the upper half plane (im > 0)", "tau.im");
    }
    return {re, im};
}

namespace {

std::int64_t checked_dot(std::int64_t x1, std::int64_t y1, std::int64_t x2, std::int64_t y2) {
    std::int64_t p1, p2, sum;
    if (__builtin_mul_overflow(x1, y1, &p1) || __builtin_mul_overflow(x2, y2, &p2) ||
        __builtin_add_overflow(p1, p2, &sum)) {
        throw Error(ErrorKind::overflow, "SL(2,Z) witness entry exceeds 64-bit range");
    }
    return sum;
}

}  // namespace

Unimodular::Unimodular(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
    std::int64_t ad, bc, det;
    if (__builtin_mul_overflow(a, d, &ad) || __builtin_mul_overflow(b, c, &bc) ||
        __builtin_sub_overflow(ad, bc, &det) || det != 1) {
        throw Error(ErrorKind::domain, "matrix determinant is not 1", "witness");
    }
}

Unimodular operator*(const Unimodular& l, const Unimodular& r) {
    Unimodular out;
    out.a_ = checked_dot(l.a_, r.a_, l.b_, r.c_);
    out.b_ = checked_dot(l.a_, r.b_, l.b_, r.d_);
    out.c_ = checked_dot(l.c_, r.a_, l.d_, r.c_);
    out.d_ = checked_dot(l.c_, r.b_, l.d_, r.d_);
    return out;
}

Tau mobius_apply(const Unimodular& m, const Tau& t) {
    const auto a = static_cast<double>(m.a());
    const auto b = static_cast<double>(m.b());
    const auto c = static_cast<double>(m.c());
    const auto d = static_cast<double>(m.d());
    const double den_re = c * t.re + d;
    const double den_im = c * t.im;
    const double den2 = den_re * den_re + den_im * den_im;
    const double num_re = a * t.re + b;
    const double num_im = a * t.im;
    // Im part written as det * im / |c tau + d|^2 so positivity is exact.
    return {(num_re * den_re + num_im * den_im) / den2, t.im / den2};
}

bool in_fundamental_domain(const Tau& t, double tol) {
    if (!(t.re > -0.5 && t.re <= 0.5) || !(t.im > 0.0)) return false;
    const double n2 = t.re * t.re + t.im * t.im;
    if (n2 < 1.0 - tol) return false;
    if (n2 <= 1.0 + tol && t.re < 0.0) return false;
    return true;
}

namespace {

// Integer shift n with re - n in (-1/2, 1/2].
std::int64_t centering_shift(double re) {
    const double n = std::ceil(re - 0.5);
    if (std::abs(n) > 9.0e18) {
        throw Error(ErrorKind::reduction_failure, "real part too large to reduce");
    }
    return static_cast<std::int64_t>(n);
}

void translate(Tau& t, Unimodular& w) {
    const std::int64_t n = centering_shift(t.re);
    if (n != 0) {
        t.re -= static_cast<double>(n);
        w = Unimodular::T(-n) * w;
    }
}

void invert(Tau& t, Unimodular& w) {
    t = mobius_apply(Unimodular::S(), t);
    w = Unimodular::S() * w;
}

}  // namespace

ReducedTau reduce_to_fundamental(const Tau& input) {
    if (!std::isfinite(input.re) || !std::isfinite(input.im) || !(input.im > 0.0)) {
        throw Error(ErrorKind::reduction_failure, "cannot reduce a non-finite or non-upper tau");
    }
    Tau t = input;
    Unimodular w;
    int steps = 0;
    for (;;) {
        if (++steps > kMaxReductionSteps) {
            throw Error(ErrorKind::reduction_failure,
                        "reduction exceeded " + std::to_string(kMaxReductionSteps) + " steps");
        }
        translate(t, w);
        if (t.re * t.re + t.im * t.im < 1.0 - kArcTolerance) {
            invert(t, w);
            continue;
        }
        break;
    }
    // On the arc, pick the representative with re >= 0.
    const double n2 = t.re * t.re + t.im * t.im;
    if (n2 <= 1.0 + kArcTolerance && t.re < 0.0) {
        invert(t, w);
        translate(t, w);
    }
    return {t, w};
}

namespace {

bool close(const Tau& x, const Tau& y, double tol) {
    return std::abs(x.re - y.re) < tol && std::abs(x.im - y.im) < tol;
}

}  // namespace

Equivalence is_equivalent(const Tau& t1, const Tau& t2, double tol) {
    const ReducedTau r1 = reduce_to_fundamental(t1);
    const ReducedTau r2 = reduce_to_fundamental(t2);
    // Boundary identifications: the vertical edges by T, the arc by S, and the
    // corners by words of length two.
    const Unimodular S = Unimodular::S();
    const Unimodular T = Unimodular::T(1);
    const Unimodular Ti = Unimodular::T(-1);
    const std::array<Unimodular, 9> moves = {Unimodular::identity(), T, Ti, S, S * T, S * Ti,
                                             T * S, Ti * S, T * S * T};
    for (const Unimodular& m : moves) {
        if (close(mobius_apply(m, r1.tau), r2.tau, tol)) {
            return {true, r2.witness.inverse() * m * r1.witness};
        }
    }
    return {false, std::nullopt};
}

std::complex<double> j_invariant(const Tau& t) {
    const Tau reduced = reduce_to_fundamental(t).tau;
    using cd = std::complex<double>;
    const cd q = std::exp(cd(0.0, numerics::kTwoPi) * reduced.value());
    const double q_abs = std::abs(q);

    cd e4_tail(0.0, 0.0);
    cd delta_product(1.0, 0.0);
    cd q_n(1.0, 0.0);
    for (int n = 1; n <= 200; ++n) {
        q_n *= q;
        long double sigma3 = 0.0L;
        for (int d = 1; d <= n; ++d) {
            if (n % d == 0) sigma3 += static_cast<long double>(d) * d * d;
        }
        e4_tail += static_cast<double>(sigma3) * q_n;
        delta_product *= std::pow(1.0 - q_n, 24);
        if (std::pow(q_abs, n) * static_cast<double>(n) * n * n * n < 1e-20) break;
    }
    const cd e4 = 1.0 + 240.0 * e4_tail;
    const cd delta = q * delta_product;
    return e4 * e4 * e4 / delta;
}

}  // namespace ctori::modular
