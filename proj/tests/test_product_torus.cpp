#include <doctest.h>

#include <cmath>
#include <random>

#include "ctori/errors.hpp"
#include "ctori/modular.hpp"
#include "ctori/product_torus.hpp"
#include "ctori/standard_torus.hpp"

using namespace ctori;
using namespace ctori::product;
using modular::is_equivalent;
using standard::StandardTorus;

TEST_CASE("tau_product: examples") {
    CHECK(tau_product({2.0, 2.0}).im == doctest::Approx(1.0));
    const double t = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(tau_product({t * t, 1 - t * t}).im - 1.0) < 1e-15);
    const modular::Tau tau35 = tau_product({0.36, 0.64});
    CHECK(tau35.re == 0.0);
    CHECK(std::abs(tau35.im - 4.0 / 3.0) < 1e-15);
}

TEST_CASE("tau_product: domain errors") {
    CHECK_THROWS_AS(tau_product({0.0, 1.0}), Error);
    CHECK_THROWS_AS(tau_product({1.0, -2.0}), Error);
    CHECK_THROWS_AS(make_product_metric(1.0, std::nan("")), Error);
}

TEST_CASE("tau_product: ray coverage of the imaginary axis") {
    for (int k = -40; k <= 40; ++k) {
        const double ratio = std::pow(10.0, k / 10.0);
        const modular::Tau t = tau_product({1.0, ratio});
        CHECK(t.re == 0.0);
        CHECK(std::abs(t.im - std::sqrt(ratio)) < 1e-12 * std::max(1.0, std::sqrt(ratio)));
    }
}

TEST_CASE("tau_product: swapping coefficients is an S move") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> coef(0.01, 50.0);
    for (int k = 0; k < 100; ++k) {
        const double a = coef(rng), b = coef(rng);
        CHECK(is_equivalent(tau_product({b, a}), tau_product({a, b})).equivalent);
    }
}

TEST_CASE("product_for_standard: examples") {
    const ProductMetric m53 = product_for_standard(StandardTorus(5, 3));
    CHECK(std::abs(m53.b - 16.0 / 9.0) < 1e-14);
    CHECK(m53.a == 1.0);
    CHECK(std::abs(tau_product(m53).im - 0.75) < 1e-14);

    const ProductMetric square = product_for_standard(StandardTorus(std::sqrt(2.0), 1.0));
    CHECK(std::abs(square.b - 1.0) < 1e-15);
    CHECK(std::abs(tau_product(square).im - 1.0) < 1e-15);

    const ProductMetric m54 = product_for_standard(StandardTorus(5, 4));
    CHECK(std::abs(m54.b - 9.0 / 16.0) < 1e-14);
    CHECK(std::abs(tau_product(m54).im - 4.0 / 3.0) < 1e-14);
}

TEST_CASE("product_for_standard: three routes agree on random tori") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> ratio(1.01, 12.0), radius(0.1, 3.0);
    for (int k = 0; k < 100; ++k) {
        const double r = radius(rng);
        const StandardTorus T(ratio(rng) * r, r);
        const auto via_standard = modular::reduce_to_fundamental(standard::tau_standard(T)).tau;
        const auto via_product =
            modular::reduce_to_fundamental(tau_product(product_for_standard(T))).tau;
        CHECK(std::abs(via_standard.re - via_product.re) < 1e-9);
        CHECK(std::abs(via_standard.im - via_product.im) < 1e-9);
        CHECK(is_equivalent(tau_product(product_for_standard(T)), standard::tau_standard(T))
                  .equivalent);
    }
}

TEST_CASE("scale_invariance_check: examples") {
    CHECK(scale_invariance_check({1.0, 3.0}, 7.0));
    CHECK(scale_invariance_check({2.0, 5.0}, 0.1));
    const double t = 0.3;
    CHECK(is_equivalent(tau_product({t * t, 1 - t * t}), tau_product({1.0, (1 - t * t) / (t * t)}))
              .equivalent);
    CHECK_THROWS_AS(scale_invariance_check({1.0, 1.0}, 0.0), Error);
}
