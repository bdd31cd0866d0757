#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ctori/modular.hpp"
#include "ctori/numerics.hpp"
#include "ctori/quaternion.hpp"

namespace ctori::hopf {

/// Point of the unit sphere in span{1, j, k}.
struct SpherePoint {
    double c1 = 1.0;
    double cj = 0.0;
    double ck = 0.0;

    Quaternion as_quaternion() const noexcept { return {c1, 0.0, cj, ck}; }
};

inline constexpr double kUnitTolerance = 1e-9;

/// Throws ErrorKind::validation unless c1^2 + cj^2 + ck^2 = 1 within 1e-9.
SpherePoint make_sphere_point(double c1, double cj, double ck);

/// Great-circle distance.
double sphere_distance(const SpherePoint& p, const SpherePoint& q) noexcept;

/// Closed polygon on S^2; the last point connects back to the first.
class SphereCurve {
public:
    /// Validates at least 3 unit points with distinct, non-antipodal neighbours.
    explicit SphereCurve(std::vector<SpherePoint> points);

    const std::vector<SpherePoint>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    const SpherePoint& operator[](std::size_t k) const { return points_[k]; }
    /// Successor of k with wrap-around.
    const SpherePoint& next(std::size_t k) const { return points_[(k + 1) % points_.size()]; }

    SphereCurve reversed() const;

private:
    std::vector<SpherePoint> points_;
};

/// pi(q) = tilde(q) q. Throws ErrorKind::domain for non-unit q.
SpherePoint hopf_project(const Quaternion& q);

/// A unit quaternion q with hopf_project(q) = p: (1 + p)/|1 + p|, switching to
/// j (1 - p)/|1 - p| near p = -1.
Quaternion lift_point(const SpherePoint& p);

/// t cos(theta) + t sin(theta) i + sqrt(1 - t^2)(cos(phi) j + sin(phi) k).
/// Throws ErrorKind::domain unless 0 < t < 1.
Quaternion product_embedding(double t, double theta, double phi);

/// n samples of the circle 2t^2 - 1 + 2t sqrt(1 - t^2)(cos(s) j + sin(s) k).
SphereCurve circle_curve(double t, std::size_t n);

/// The circle of circle_curve(t) with its angular radius about -1 modulated:
/// alpha(s) = alpha0 + amplitude * sin(frequency * s).
SphereCurve wobbled_circle_curve(double t, double amplitude, int frequency, std::size_t n);

/// Sum of great-circle edge lengths of the closed polygon.
double curve_length(const SphereCurve& curve);

/// Enclosed area from discrete Gauss-Bonnet, 2 pi minus the summed turning
/// angles, normalized into [-2 pi, 2 pi).
double signed_area(const SphereCurve& curve);

struct LiftResult {
    numerics::Trajectory lift;  // states are (w, x, y, z); times are lift arc length
    double holonomy_delta = 0.0;  // in [-pi, pi)
    double lift_length = 0.0;

    Quaternion state(std::size_t k) const;
};

inline constexpr std::size_t kDefaultPhaseSteps = 2;

/// Horizontal lift of the closed polygon through eta0 (default lift_point of
/// the first sample). Each edge is lifted through a local section and the
/// vertical phase is removed by integrating phi' = -<s', i s> with RK4.
/// The final state closes the loop: eta(end) = e^{i delta} eta(0).
LiftResult horizontal_lift(const SphereCurve& curve, std::optional<Quaternion> eta0 = {},
                           std::size_t phase_steps = kDefaultPhaseSteps);

/// (A + i L) / (4 pi). Throws ErrorKind::domain for L <= 0.
modular::Tau tau_hopf(double length, double area);

/// (|A|/2 - pi)^2 + (L/2)^2 - pi^2; non-negative for simple closed curves.
double isoperimetric_defect(double length, double area);

/// |delta - A/2| reduced modulo 2 pi into [0, pi].
double holonomy_gap(double delta, double area);

struct CoverMetricDeviation {
    double tt = 0.0;  // max |<d_t chi, d_t chi> - 1|
    double pp = 0.0;  // max |<d_phi chi, d_phi chi> - 1|
    double tp = 0.0;  // max |<d_t chi, d_phi chi>|

    double max() const noexcept;
};

/// Central-difference check that chi(t + i phi) = e^{i phi} eta(t) is
/// conformal, for the arc-length parametrized lift of circle_curve(t_param).
CoverMetricDeviation hopf_cover_metric_deviation(double t_param, int grid,
                                                 std::size_t samples = 4096);

double hopf_cover_metric_check(double t_param, int grid, std::size_t samples = 4096);

}  // namespace ctori::hopf
