#pragma once

#include "ctori/modular.hpp"
#include "ctori/standard_torus.hpp"

namespace ctori::product {

/// Flat metric b dtheta^2 + a dphi^2 on S^1 x S^1.
struct ProductMetric {
    double b = 1.0;
    double a = 1.0;
};

/// Throws ErrorKind::domain unless both coefficients are positive and finite.
ProductMetric make_product_metric(double b, double a);

/// i * sqrt(a / b).
///
/// z = sqrt(b) theta + i sqrt(a) phi is a conformal coordinate on the
/// 2 pi x 2 pi cell, so the lattice is 2 pi sqrt(b) Z + 2 pi i sqrt(a) Z.
modular::Tau tau_product(const ProductMetric& metric);

/// Product metric with the same conformal class as the torus of revolution:
/// b = (R/r)^2 - 1, a = 1.
ProductMetric product_for_standard(const standard::StandardTorus& torus);

/// True iff scaling both coefficients by c > 0 leaves the class unchanged.
bool scale_invariance_check(const ProductMetric& metric, double c);

}  // namespace ctori::product
