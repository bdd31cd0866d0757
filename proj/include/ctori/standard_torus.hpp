#pragma once

#include <array>

#include "ctori/modular.hpp"

namespace ctori::standard {

using Point3 = std::array<double, 3>;

/// Torus of revolution with outer radius R and tube radius r, R > r > 0.
class StandardTorus {
public:
    /// Throws ErrorKind::domain unless R > r > 0.
    StandardTorus(double R, double r);

    double R() const noexcept { return R_; }
    double r() const noexcept { return r_; }
    /// Aspect ratio a = R / r > 1.
    double ratio() const noexcept { return R_ / r_; }

    friend bool operator==(const StandardTorus&, const StandardTorus&) = default;

private:
    double R_;
    double r_;
};

/// First fundamental form coefficients.
struct MetricSample {
    double E = 0.0;
    double F = 0.0;
    double G = 0.0;
};

/// ((R + r cos phi) cos theta, (R + r cos phi) sin theta, r sin phi).
Point3 embed(const StandardTorus& torus, double theta, double phi);

/// Pullback of the Euclidean metric: E = (R + r cos phi)^2, F = 0, G = r^2.
MetricSample pullback_metric(const StandardTorus& torus, double phi);

/// 2*pi / sqrt(a^2 - 1), the imaginary period of the flat coordinate.
/// Throws ErrorKind::domain for a <= 1.
double omega(double a);

/// F(phi) = integral_0^phi r / (R + r cos x) dx, evaluated by quadrature on
/// one period and extended by F(phi + 2 pi m) = F(phi) + m * omega.
double F_of_phi(const StandardTorus& torus, double phi);

/// F'(phi) = r / (R + r cos phi).
double F_derivative(const StandardTorus& torus, double phi);

/// Inverse of F over the whole real line.
double F_inverse(const StandardTorus& torus, double s);

/// Pi(theta, s) = embed(theta, F^{-1}(s)); doubly periodic in (2 pi, omega).
Point3 covering_map(const StandardTorus& torus, double theta, double s);

/// Gram matrix of the Jacobian of the covering map at (theta, s), by the chain
/// rule through F^{-1}.
MetricSample covering_gram(const StandardTorus& torus, double theta, double s);

/// max(|E' - G'| / E', |F'| / E') for the covering map's Gram matrix.
double conformality_residual(const StandardTorus& torus, double theta, double s);

/// Largest conformality residual over a grid x grid lattice in one period cell.
double max_conformality_residual(const StandardTorus& torus, int grid);

/// i / sqrt((R/r)^2 - 1): the lattice 2 pi Z + i omega Z scaled by 1/(2 pi).
modular::Tau tau_standard(const StandardTorus& torus);

/// T_{R, sqrt(R^2 - r^2)}, conformally equivalent to T_{R, r}.
StandardTorus dual(const StandardTorus& torus);

}  // namespace ctori::standard
