#include "ctori/standard_torus.hpp"

#include <algorithm>
#include <cmath>

#include "ctori/errors.hpp"
#include "ctori/numerics.hpp"

namespace ctori::standard {

using numerics::kTwoPi;

StandardTorus::StandardTorus(double R, double r) : R_(R), r_(r) {
    if (!std::isfinite(R) || !std::isfinite(r) || !(r > 0.0)) {
        throw Error(ErrorKind::domain, "tube radius r must be positive and finite", "r");
    }
    if (!(R > r)) {
        throw Error(ErrorKind::domain, "outer radius R must exceed the tube radius r", "R");
    }
}

Point3 embed(const StandardTorus& torus, double theta, double phi) {
    const double rho = torus.R() + torus.r() * std::cos(phi);
    return {rho * std::cos(theta), rho * std::sin(theta), torus.r() * std::sin(phi)};
}

MetricSample pullback_metric(const StandardTorus& torus, double phi) {
    const double rho = torus.R() + torus.r() * std::cos(phi);
    return {rho * rho, 0.0, torus.r() * torus.r()};
}

double omega(double a) {
    if (!(a > 1.0) || !std::isfinite(a)) {
        throw Error(ErrorKind::domain, "omega(a) requires a > 1 (non-degenerate torus)", "a");
    }
    return kTwoPi / std::sqrt(a * a - 1.0);
}

double F_derivative(const StandardTorus& torus, double phi) {
    return torus.r() / (torus.R() + torus.r() * std::cos(phi));
}

namespace {

// F on a single period [0, 2 pi].
double F_on_period(const StandardTorus& torus, double psi) {
    if (psi <= 0.0) return 0.0;
    const double a = torus.ratio();
    return numerics::integrate([a](double x) { return 1.0 / (a + std::cos(x)); }, 0.0, psi)
        .value;
}

}  // namespace

double F_of_phi(const StandardTorus& torus, double phi) {
    const double turns = std::floor(phi / kTwoPi);
    const double psi = phi - turns * kTwoPi;
    return turns * omega(torus.ratio()) + F_on_period(torus, psi);
}

double F_inverse(const StandardTorus& torus, double s) {
    const double w = omega(torus.ratio());
    const double turns = std::floor(s / w);
    double sigma = s - turns * w;
    if (sigma <= 0.0) return turns * kTwoPi;
    const double psi = numerics::invert_monotone(
        [&torus](double x) { return F_on_period(torus, x); }, sigma, 0.0, kTwoPi,
        numerics::kDefaultInversionTol, [&torus](double x) { return F_derivative(torus, x); });
    return turns * kTwoPi + psi;
}

Point3 covering_map(const StandardTorus& torus, double theta, double s) {
    return embed(torus, theta, F_inverse(torus, s));
}

MetricSample covering_gram(const StandardTorus& torus, double theta, double s) {
    const double phi = F_inverse(torus, s);
    const double R = torus.R();
    const double r = torus.r();
    const double rho = R + r * std::cos(phi);
    const Point3 d_theta = {-rho * std::sin(theta), rho * std::cos(theta), 0.0};
    const double chain = 1.0 / F_derivative(torus, phi);  // d phi / d s
    const Point3 d_s = {-r * std::sin(phi) * std::cos(theta) * chain,
                        -r * std::sin(phi) * std::sin(theta) * chain, r * std::cos(phi) * chain};
    auto dot = [](const Point3& u, const Point3& v) {
        return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    };
    return {dot(d_theta, d_theta), dot(d_theta, d_s), dot(d_s, d_s)};
}

double conformality_residual(const StandardTorus& torus, double theta, double s) {
    const MetricSample g = covering_gram(torus, theta, s);
    return std::max(std::abs(g.E - g.G) / g.E, std::abs(g.F) / g.E);
}

double max_conformality_residual(const StandardTorus& torus, int grid) {
    if (grid < 1) throw Error(ErrorKind::domain, "grid must be positive", "grid");
    const double w = omega(torus.ratio());
    double worst = 0.0;
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            const double theta = kTwoPi * i / grid;
            const double s = w * j / grid;
            worst = std::max(worst, conformality_residual(torus, theta, s));
        }
    }
    return worst;
}

modular::Tau tau_standard(const StandardTorus& torus) {
    const double a = torus.ratio();
    return modular::make_tau(0.0, omega(a) / kTwoPi);
}

StandardTorus dual(const StandardTorus& torus) {
    const double R = torus.R();
    const double r = torus.r();
    return {R, std::sqrt(R * R - r * r)};
}

}  // namespace ctori::standard
