#include <doctest.h>

#include <cmath>
#include <random>

#include "ctori/errors.hpp"
#include "ctori/modular.hpp"
#include "ctori/numerics.hpp"
#include "ctori/standard_torus.hpp"
#include "oracles.hpp"

using namespace ctori;
using namespace ctori::standard;
using numerics::kPi;
using numerics::kTwoPi;

namespace {

bool near3(const Point3& p, const Point3& q, double tol) {
    return std::abs(p[0] - q[0]) < tol && std::abs(p[1] - q[1]) < tol && std::abs(p[2] - q[2]) < tol;
}

double surface_identity(const StandardTorus& T, const Point3& p) {
    const double rho = std::hypot(p[0], p[1]) - T.R();
    return rho * rho + p[2] * p[2] - T.r() * T.r();
}

}  // namespace

TEST_CASE("StandardTorus: invariants") {
    CHECK_NOTHROW(StandardTorus(2.0, 1.0));
    CHECK_THROWS_AS(StandardTorus(1.0, 1.0), Error);
    CHECK_THROWS_AS(StandardTorus(2.0, 0.0), Error);
    CHECK_THROWS_AS(StandardTorus(1.0, 2.0), Error);
}

TEST_CASE("embed: examples and surface identity") {
    const StandardTorus t21(2.0, 1.0);
    CHECK(near3(embed(t21, 0.0, 0.0), {3.0, 0.0, 0.0}, 1e-15));
    CHECK(near3(embed(t21, kPi / 2, kPi), {0.0, 1.0, 0.0}, 1e-15));
    const StandardTorus t53(5.0, 3.0);
    const Point3 p = embed(t53, kPi / 4, kPi / 2);
    CHECK(near3(p, {5.0 / std::sqrt(2.0), 5.0 / std::sqrt(2.0), 3.0}, 1e-14));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(-20.0, 20.0);
    for (int k = 0; k < 100; ++k) {
        CHECK(std::abs(surface_identity(t53, embed(t53, angle(rng), angle(rng)))) < 1e-12);
    }
}

TEST_CASE("pullback_metric: examples match numerical Jacobian") {
    const StandardTorus t21(2.0, 1.0);
    const StandardTorus t53(5.0, 3.0);
    auto g = pullback_metric(t21, 0.0);
    CHECK(g.E == doctest::Approx(9.0));
    CHECK(g.F == 0.0);
    CHECK(g.G == doctest::Approx(1.0));
    g = pullback_metric(t21, kPi);
    CHECK(g.E == doctest::Approx(1.0));
    g = pullback_metric(t53, kPi / 2);
    CHECK(g.E == doctest::Approx(25.0));
    CHECK(g.G == doctest::Approx(9.0));

    const double h = 1e-5;
    for (double theta : {0.0, 0.7, 2.5}) {
        for (double phi : {0.0, 1.1, kPi / 2, 4.0}) {
            const Point3 pt = embed(t53, theta + h, phi), mt = embed(t53, theta - h, phi);
            const Point3 pp = embed(t53, theta, phi + h), mp = embed(t53, theta, phi - h);
            Point3 dt{}, dp{};
            for (int i = 0; i < 3; ++i) {
                dt[i] = (pt[i] - mt[i]) / (2 * h);
                dp[i] = (pp[i] - mp[i]) / (2 * h);
            }
            const auto sample = pullback_metric(t53, phi);
            CHECK(std::abs(dt[0] * dt[0] + dt[1] * dt[1] + dt[2] * dt[2] - sample.E) < 1e-6);
            CHECK(std::abs(dt[0] * dp[0] + dt[1] * dp[1] + dt[2] * dp[2] - sample.F) < 1e-6);
            CHECK(std::abs(dp[0] * dp[0] + dp[1] * dp[1] + dp[2] * dp[2] - sample.G) < 1e-6);
        }
    }
}

TEST_CASE("omega: closed form against quadrature") {
    CHECK(std::abs(omega(std::sqrt(2.0)) - kTwoPi) < 1e-12);
    CHECK(std::abs(omega(2.0) - 3.6275987284684357) < 1e-13);
    CHECK(std::abs(omega(10.0) - 0.63148388339965529) < 1e-13);
    for (double a : {1.1, 1.25, 5.0 / 3.0, 2.0, 10.0}) {
        const double quad =
            numerics::integrate([a](double x) { return 1.0 / (a + std::cos(x)); }, 0.0, kTwoPi).value;
        CHECK(std::abs(quad - omega(a)) < 1e-9);
    }
    CHECK_THROWS_AS(omega(1.0), Error);
    CHECK_THROWS_AS(omega(0.5), Error);
}

TEST_CASE("F_of_phi: examples, closed form and quasi-periodicity") {
    const StandardTorus t21(2.0, 1.0);
    CHECK(F_of_phi(t21, 0.0) == 0.0);
    CHECK(std::abs(F_of_phi(t21, kTwoPi) - omega(2.0)) < 1e-12);
    CHECK(std::abs(F_of_phi(t21, kPi) - 1.8137993642342178) < 1e-11);
    CHECK(std::abs(F_of_phi(t21, 1.0) - 0.35279779326504838) < 1e-11);

    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> angle(-30.0, 30.0);
    const StandardTorus t54(5.0, 4.0);
    for (int k = 0; k < 50; ++k) {
        const double phi = angle(rng);
        CHECK(std::abs(F_of_phi(t54, phi + kTwoPi) - F_of_phi(t54, phi) - omega(1.25)) < 1e-9);
        CHECK(std::abs(F_of_phi(t54, phi) - oracle::F_closed_form(1.25, phi)) < 1e-9);
    }
    // Strictly increasing.
    double prev = F_of_phi(t54, -7.0);
    for (double phi = -6.9; phi < 7.0; phi += 0.1) {
        const double cur = F_of_phi(t54, phi);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("F_inverse: examples and round trip") {
    const StandardTorus t21(2.0, 1.0);
    CHECK(F_inverse(t21, 0.0) == 0.0);
    CHECK(std::abs(F_inverse(t21, omega(2.0)) - kTwoPi) < 1e-9);
    CHECK(std::abs(F_inverse(t21, omega(2.0) / 2) - kPi) < 1e-9);
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> s(-20.0, 20.0);
    for (int k = 0; k < 50; ++k) {
        const double x = s(rng);
        CHECK(std::abs(F_of_phi(t21, F_inverse(t21, x)) - x) < 1e-9);
    }
}

TEST_CASE("covering_map: examples and double periodicity") {
    const StandardTorus t21(2.0, 1.0);
    const double w = omega(2.0);
    CHECK(near3(covering_map(t21, 0.0, 0.0), {3.0, 0.0, 0.0}, 1e-12));
    CHECK(near3(covering_map(t21, 0.0, w), {3.0, 0.0, 0.0}, 1e-8));
    CHECK(near3(covering_map(t21, kPi, w / 2), {-1.0, 0.0, 0.0}, 1e-8));

    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::uniform_int_distribution<int> m(-3, 3);
    for (const auto& T : {StandardTorus(2, 1), StandardTorus(5, 3), StandardTorus(5, 4)}) {
        const double wt = omega(T.ratio());
        for (int k = 0; k < 20; ++k) {
            const double theta = u(rng), s = u(rng);
            const Point3 base = covering_map(T, theta, s);
            CHECK(near3(covering_map(T, theta + kTwoPi * m(rng), s), base, 1e-8));
            CHECK(near3(covering_map(T, theta, s + wt * m(rng)), base, 1e-8));
        }
    }
}

TEST_CASE("conformality_residual: analytic and finite-difference routes") {
    const StandardTorus t21(2.0, 1.0);
    const StandardTorus t53(5.0, 3.0);
    CHECK(conformality_residual(t21, 0.3, 0.7) < 1e-6);
    CHECK(conformality_residual(t53, 0.0, 0.0) < 1e-6);
    CHECK(std::abs(covering_gram(t21, 1.0, 0.5).F) / covering_gram(t21, 1.0, 0.5).E < 1e-8);

    for (const auto& T : {StandardTorus(2, 1), StandardTorus(5, 3), StandardTorus(5, 4)}) {
        CHECK(max_conformality_residual(T, 32) < 1e-6);
        // Central differences of the covering map itself.
        const double h = 1e-4;
        for (double theta : {0.2, 3.0}) {
            for (double s : {0.1, 0.9, 2.3}) {
                Point3 dt{}, ds{};
                const Point3 a = covering_map(T, theta + h, s), b = covering_map(T, theta - h, s);
                const Point3 c = covering_map(T, theta, s + h), d = covering_map(T, theta, s - h);
                for (int i = 0; i < 3; ++i) {
                    dt[i] = (a[i] - b[i]) / (2 * h);
                    ds[i] = (c[i] - d[i]) / (2 * h);
                }
                const double E = dt[0] * dt[0] + dt[1] * dt[1] + dt[2] * dt[2];
                const double G = ds[0] * ds[0] + ds[1] * ds[1] + ds[2] * ds[2];
                const double F = dt[0] * ds[0] + dt[1] * ds[1] + dt[2] * ds[2];
                CHECK(std::max(std::abs(E - G) / E, std::abs(F) / E) < 1e-6);
            }
        }
    }
}

TEST_CASE("tau_standard: examples") {
    CHECK(std::abs(tau_standard(StandardTorus(std::sqrt(2.0), 1.0)).im - 1.0) < 1e-14);
    CHECK(std::abs(tau_standard(StandardTorus(5, 3)).im - 0.75) < 1e-14);
    CHECK(std::abs(tau_standard(StandardTorus(5, 4)).im - 4.0 / 3.0) < 1e-14);
    CHECK(tau_standard(StandardTorus(5, 3)).re == 0.0);
}

TEST_CASE("tau_standard: scaling both radii keeps the class") {
    // Equal aspect ratio means equal conformal class (T_{R',r'} with R'/r' = R/r).
    for (double scale : {0.1, 3.0, 17.5}) {
        CHECK(modular::is_equivalent(tau_standard(StandardTorus(5, 3)),
                                     tau_standard(StandardTorus(5 * scale, 3 * scale)))
                  .equivalent);
    }
}

TEST_CASE("dual: examples, involution and class preservation") {
    const StandardTorus d = dual(StandardTorus(5, 4));
    CHECK(d == StandardTorus(5, 3));
    CHECK(dual(d) == StandardTorus(5, 4));
    const StandardTorus fixed = dual(StandardTorus(std::sqrt(2.0) * 3.0, 3.0));
    CHECK(std::abs(fixed.r() - 3.0) < 1e-14);

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ratio(1.0001, std::sqrt(2.0) - 1e-4), radius(0.1, 5.0);
    for (int k = 0; k < 20; ++k) {
        const double r = radius(rng);
        const StandardTorus T(ratio(rng) * r, r);
        CHECK(modular::is_equivalent(tau_standard(T), tau_standard(dual(T))).equivalent);
        const StandardTorus back = dual(dual(T));
        CHECK(back.R() == T.R());
        CHECK(std::abs(back.r() - T.r()) <= 1e-15 * T.R());
    }
}

TEST_CASE("dual: ratio map a -> a / sqrt(a^2 - 1) is decreasing on (1, sqrt 2)") {
    double prev = INFINITY;
    for (int k = 1; k < 200; ++k) {
        const double a = 1.0 + (std::sqrt(2.0) - 1.0) * k / 200.0;
        const double image = dual(StandardTorus(a, 1.0)).ratio();
        CHECK(std::abs(image - a / std::sqrt(a * a - 1.0)) < 1e-12);
        CHECK(image < prev);
        CHECK(image > std::sqrt(2.0) - 1e-12);
        prev = image;
    }
}
