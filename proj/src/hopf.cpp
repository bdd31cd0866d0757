#include "ctori/hopf.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "ctori/errors.hpp"

namespace ctori::hopf {

using numerics::kPi;
using numerics::kTwoPi;

namespace {

using Vec3 = std::array<double, 3>;

Vec3 to_vec(const SpherePoint& p) { return {p.c1, p.cj, p.ck}; }

Vec3 cross(const Vec3& u, const Vec3& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

double dot3(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

double norm3(const Vec3& u) { return std::sqrt(dot3(u, u)); }

}  // namespace

SpherePoint make_sphere_point(double c1, double cj, double ck) {
    const double n2 = c1 * c1 + cj * cj + ck * ck;
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kUnitTolerance) {
        throw Error(ErrorKind::validation, "sphere point is not unit length", "points");
    }
    return {c1, cj, ck};
}

double sphere_distance(const SpherePoint& p, const SpherePoint& q) noexcept {
    const Vec3 u = to_vec(p);
    const Vec3 v = to_vec(q);
    return std::atan2(norm3(cross(u, v)), dot3(u, v));
}

SphereCurve::SphereCurve(std::vector<SpherePoint> points) : points_(std::move(points)) {
    if (points_.size() < 3) {
        throw Error(ErrorKind::validation, "a sphere curve needs at least 3 points", "points");
    }
    for (std::size_t k = 0; k < points_.size(); ++k) {
        const SpherePoint& p = points_[k];
        make_sphere_point(p.c1, p.cj, p.ck);
        const double d = sphere_distance(p, next(k));
        if (!(d > 1e-12)) {
            throw Error(ErrorKind::validation,
                        "consecutive points " + std::to_string(k) + " coincide", "points");
        }
        if (!(d < kPi - 1e-9)) {
            throw Error(ErrorKind::validation,
                        "consecutive points " + std::to_string(k) + " are antipodal", "points");
        }
    }
}

SphereCurve SphereCurve::reversed() const {
    return SphereCurve(std::vector<SpherePoint>(points_.rbegin(), points_.rend()));
}

SpherePoint hopf_project(const Quaternion& q) {
    if (std::abs(q.norm2() - 1.0) > kUnitTolerance) {
        throw Error(ErrorKind::domain, "Hopf projection needs a unit quaternion", "q");
    }
    const Quaternion p = q.tilde() * q;
    // tilde(q) q has no i-component; the residue is pure rounding.
    return {p.w, p.y, p.z};
}

Quaternion lift_point(const SpherePoint& p) {
    const Quaternion pq = p.as_quaternion();
    if (p.c1 > -0.5) {
        return (Quaternion::one() + pq).normalized();
    }
    return Quaternion::unit_j() * (Quaternion::one() - pq).normalized();
}

Quaternion product_embedding(double t, double theta, double phi) {
    if (!(t > 0.0 && t < 1.0)) {
        throw Error(ErrorKind::domain, "product embedding requires 0 < t < 1", "t");
    }
    const double c = std::sqrt(1.0 - t * t);
    return {t * std::cos(theta), t * std::sin(theta), c * std::cos(phi), c * std::sin(phi)};
}

SphereCurve circle_curve(double t, std::size_t n) {
    if (!(t > 0.0 && t < 1.0)) {
        throw Error(ErrorKind::domain, "circle parameter requires 0 < t < 1", "t");
    }
    if (n < 16) throw Error(ErrorKind::domain, "circle needs at least 16 samples", "n");
    const double height = 2.0 * t * t - 1.0;
    const double radius = 2.0 * t * std::sqrt(1.0 - t * t);
    if (!(radius > 1e-9)) {
        throw Error(ErrorKind::domain, "circle radius degenerates for this t", "t");
    }
    std::vector<SpherePoint> pts;
    pts.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        pts.push_back({height, radius * std::cos(s), radius * std::sin(s)});
    }
    return SphereCurve(std::move(pts));
}

SphereCurve wobbled_circle_curve(double t, double amplitude, int frequency, std::size_t n) {
    if (!(t > 0.0 && t < 1.0)) {
        throw Error(ErrorKind::domain, "circle parameter requires 0 < t < 1", "t");
    }
    if (n < 16) throw Error(ErrorKind::domain, "curve needs at least 16 samples", "n");
    // Angular radius about the point -1: cos(alpha0) = 1 - 2 t^2.
    const double alpha0 = std::acos(1.0 - 2.0 * t * t);
    if (!(alpha0 - std::abs(amplitude) > 0.0 && alpha0 + std::abs(amplitude) < kPi)) {
        throw Error(ErrorKind::domain, "wobble amplitude leaves (0, pi)", "amplitude");
    }
    std::vector<SpherePoint> pts;
    pts.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        const double alpha = alpha0 + amplitude * std::sin(frequency * s);
        pts.push_back({-std::cos(alpha), std::sin(alpha) * std::cos(s), std::sin(alpha) * std::sin(s)});
    }
    return SphereCurve(std::move(pts));
}

double curve_length(const SphereCurve& curve) {
    double total = 0.0;
    for (std::size_t k = 0; k < curve.size(); ++k) {
        total += sphere_distance(curve[k], curve.next(k));
    }
    return total;
}

double signed_area(const SphereCurve& curve) {
    const std::size_t n = curve.size();
    double turning = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const Vec3 prev = to_vec(curve[(k + n - 1) % n]);
        const Vec3 here = to_vec(curve[k]);
        const Vec3 succ = to_vec(curve.next(k));
        // Normals of the incoming and outgoing great circles; rotating one into
        // the other about `here` is the exterior angle at the vertex.
        const Vec3 n_in = cross(prev, here);
        const Vec3 n_out = cross(here, succ);
        if (norm3(n_in) < 1e-15 || norm3(n_out) < 1e-15) {
            throw Error(ErrorKind::degenerate_curve,
                        "turning angle undefined at vertex " + std::to_string(k));
        }
        turning += std::atan2(dot3(here, cross(n_in, n_out)), dot3(n_in, n_out));
    }
    // Exterior angles measured about the inward normal -p.
    double area = kTwoPi + turning;
    if (area < -kTwoPi) area += 2.0 * kTwoPi;
    // A great circle sits exactly on the window edge; keep it at -2 pi.
    if (area >= kTwoPi - 1e-9) area -= 2.0 * kTwoPi;
    return area;
}

Quaternion LiftResult::state(std::size_t k) const {
    const auto& s = lift.states.at(k);
    return {s[0], s[1], s[2], s[3]};
}

namespace {

// Local section of the bundle over the arc from p0 to p1, as an unnormalized
// quaternion field q with hopf_project(q / |q|) = p.
struct ArcSection {
    Vec3 p0, p1;
    double angle;
    bool upper;  // (1 + p) when true, j (1 - p) otherwise

    Vec3 point(double tau) const {
        if (angle < 1e-300) return p0;
        const double s = std::sin(angle);
        const double a = std::sin((1.0 - tau) * angle) / s;
        const double b = std::sin(tau * angle) / s;
        return {a * p0[0] + b * p1[0], a * p0[1] + b * p1[1], a * p0[2] + b * p1[2]};
    }

    Vec3 velocity(double tau) const {
        const double s = std::sin(angle);
        const double a = -angle * std::cos((1.0 - tau) * angle) / s;
        const double b = angle * std::cos(tau * angle) / s;
        return {a * p0[0] + b * p1[0], a * p0[1] + b * p1[1], a * p0[2] + b * p1[2]};
    }

    Quaternion raw(const Vec3& p) const {
        const Quaternion pq{p[0], 0.0, p[1], p[2]};
        return upper ? Quaternion::one() + pq : Quaternion::unit_j() * (Quaternion::one() - pq);
    }

    Quaternion raw_velocity(const Vec3& v) const {
        const Quaternion vq{v[0], 0.0, v[1], v[2]};
        return upper ? vq : Quaternion::unit_j() * (-1.0 * vq);
    }

    Quaternion unit(double tau) const { return raw(point(tau)).normalized(); }

    // d phi / d tau removing the vertical part of the section's velocity.
    double phase_rate(double tau) const {
        const Quaternion q = raw(point(tau));
        const Quaternion dq = raw_velocity(velocity(tau));
        return -dot(dq, Quaternion::unit_i() * q) / q.norm2();
    }
};

double wrap_phase(double delta) {
    delta = std::remainder(delta, kTwoPi);  // [-pi, pi]
    if (delta >= kPi) delta -= kTwoPi;
    return delta;
}

double chord_arc(const Quaternion& a, const Quaternion& b) {
    const double chord = (b - a).norm();
    return 2.0 * std::asin(std::min(1.0, 0.5 * chord));
}

double projection_error(const Quaternion& q, const SpherePoint& p) {
    const SpherePoint got = hopf_project(q);
    return std::max({std::abs(got.c1 - p.c1), std::abs(got.cj - p.cj), std::abs(got.ck - p.ck)});
}

}  // namespace

LiftResult horizontal_lift(const SphereCurve& curve, std::optional<Quaternion> eta0,
                           std::size_t phase_steps) {
    const std::size_t n = curve.size();
    Quaternion eta = eta0 ? *eta0 : lift_point(curve[0]);
    if (std::abs(eta.norm2() - 1.0) > kUnitTolerance) {
        throw Error(ErrorKind::validation, "initial lift point is not a unit quaternion", "eta0");
    }
    if (projection_error(eta, curve[0]) > 1e-8) {
        throw Error(ErrorKind::validation, "initial lift point does not project to the curve",
                    "eta0");
    }

    LiftResult result;
    auto push = [&result](double time, const Quaternion& q) {
        result.lift.times.push_back(time);
        result.lift.states.push_back({q.w, q.x, q.y, q.z});
    };
    result.lift.times.reserve(n + 1);
    result.lift.states.reserve(n + 1);
    push(0.0, eta);

    const Quaternion start = eta;
    double length = 0.0;
    const std::array<double, 1> phase0 = {0.0};

    for (std::size_t k = 0; k < n; ++k) {
        const Vec3 p0 = to_vec(curve[k]);
        const Vec3 p1 = to_vec(curve.next(k));
        ArcSection section{p0, p1, std::atan2(norm3(cross(p0, p1)), dot3(p0, p1)),
                           p0[0] + p1[0] >= 0.0};

        // Fiber element carrying the section onto the current lift point.
        Quaternion align = eta * section.unit(0.0).conj();
        align = Quaternion(align.w, align.x, 0.0, 0.0).normalized();

        const auto phase = numerics::solve_ivp(
            [&section](double tau, std::span<const double>) {
                return std::vector<double>{section.phase_rate(tau)};
            },
            phase0, 0.0, 1.0, phase_steps);
        const double phi = phase.final_state()[0];

        const Quaternion next = (Quaternion::exp_i(phi) * align * section.unit(1.0)).normalized();
        if (projection_error(next, curve.next(k)) > 1e-5) {
            throw Error(ErrorKind::lift_diverged,
                        "horizontal lift drifted off the curve at sample " + std::to_string(k + 1));
        }
        const double step = chord_arc(eta, next);
        if (!(step > 0.0)) {
            throw Error(ErrorKind::lift_diverged, "horizontal lift stalled at sample " +
                                                      std::to_string(k + 1));
        }
        length += step;
        eta = next;
        push(length, eta);
    }

    const Quaternion loop = eta * start.conj();
    result.holonomy_delta = wrap_phase(std::atan2(loop.x, loop.w));
    result.lift_length = length;
    return result;
}

modular::Tau tau_hopf(double length, double area) {
    if (!(length > 0.0) || !std::isfinite(length)) {
        throw Error(ErrorKind::domain, "curve length must be positive", "L");
    }
    if (!std::isfinite(area)) throw Error(ErrorKind::domain, "area must be finite", "A");
    return modular::make_tau(area / (2.0 * kTwoPi), length / (2.0 * kTwoPi));
}

double isoperimetric_defect(double length, double area) {
    // Orientation-free: reversing the curve flips the sign of A.
    const double x = 0.5 * std::abs(area) - kPi;
    const double y = 0.5 * length;
    return x * x + y * y - kPi * kPi;
}

double holonomy_gap(double delta, double area) {
    return std::abs(std::remainder(delta - 0.5 * area, kTwoPi));
}

double CoverMetricDeviation::max() const noexcept { return std::max({tt, pp, tp}); }

namespace {

// Great-circle interpolation of the lift at arc length lambda.
Quaternion lift_at(const LiftResult& lift, double lambda) {
    const auto& times = lift.lift.times;
    auto it = std::upper_bound(times.begin(), times.end(), lambda);
    std::size_t hi = static_cast<std::size_t>(it - times.begin());
    hi = std::clamp<std::size_t>(hi, 1, times.size() - 1);
    const std::size_t lo = hi - 1;
    const Quaternion a = lift.state(lo);
    const Quaternion b = lift.state(hi);
    const double span = times[hi] - times[lo];
    const double u = (lambda - times[lo]) / span;
    const double omega = std::acos(std::clamp(dot(a, b), -1.0, 1.0));
    const double s = std::sin(omega);
    return (std::sin((1.0 - u) * omega) / s) * a + (std::sin(u * omega) / s) * b;
}

}  // namespace

CoverMetricDeviation hopf_cover_metric_deviation(double t_param, int grid, std::size_t samples) {
    if (grid < 1) throw Error(ErrorKind::domain, "grid must be positive", "grid");
    const LiftResult lift = horizontal_lift(circle_curve(t_param, samples));
    const double total = lift.lift_length;
    const double h = 1e-6;

    auto chi = [&lift](double lambda, double phi) {
        return Quaternion::exp_i(phi) * lift_at(lift, lambda);
    };

    CoverMetricDeviation dev;
    for (int a = 0; a < grid; ++a) {
        const double lambda = total * (a + 0.5) / grid;
        for (int b = 0; b < grid; ++b) {
            const double phi = kTwoPi * b / grid;
            const Quaternion d_t = (1.0 / (2.0 * h)) * (chi(lambda + h, phi) - chi(lambda - h, phi));
            const Quaternion d_p = (1.0 / (2.0 * h)) * (chi(lambda, phi + h) - chi(lambda, phi - h));
            dev.tt = std::max(dev.tt, std::abs(dot(d_t, d_t) - 1.0));
            dev.pp = std::max(dev.pp, std::abs(dot(d_p, d_p) - 1.0));
            dev.tp = std::max(dev.tp, std::abs(dot(d_t, d_p)));
        }
    }
    return dev;
}

double hopf_cover_metric_check(double t_param, int grid, std::size_t samples) {
    return hopf_cover_metric_deviation(t_param, grid, samples).max();
}

}  // namespace ctori::hopf
