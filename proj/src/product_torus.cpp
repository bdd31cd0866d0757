#include "ctori/product_torus.hpp"

#include <cmath>

#include "ctori/errors.hpp"

namespace ctori::product {

ProductMetric make_product_metric(double b, double a) {
    if (!(b > 0.0) || !std::isfinite(b)) {
        throw Error(ErrorKind::domain, "metric coefficient b must be positive", "b");
    }
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw Error(ErrorKind::domain, "metric coefficient a must be positive", "a");
    }
    return {b, a};
}

modular::Tau tau_product(const ProductMetric& metric) {
    const ProductMetric m = make_product_metric(metric.b, metric.a);
    return modular::make_tau(0.0, std::sqrt(m.a / m.b));
}

ProductMetric product_for_standard(const standard::StandardTorus& torus) {
    const double ratio = torus.ratio();
    return make_product_metric(ratio * ratio - 1.0, 1.0);
}

bool scale_invariance_check(const ProductMetric& metric, double c) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw Error(ErrorKind::domain, "scale factor must be positive", "c");
    }
    const ProductMetric scaled = make_product_metric(c * metric.b, c * metric.a);
    return modular::is_equivalent(tau_product(metric), tau_product(scaled)).equivalent;
}

}  // namespace ctori::product
