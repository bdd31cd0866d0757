#pragma once

#include <cmath>

namespace ctori::hopf {

/// w + x i + y j + z k.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() noexcept = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_) noexcept
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion one() noexcept { return {1, 0, 0, 0}; }
    static constexpr Quaternion unit_i() noexcept { return {0, 1, 0, 0}; }
    static constexpr Quaternion unit_j() noexcept { return {0, 0, 1, 0}; }
    static constexpr Quaternion unit_k() noexcept { return {0, 0, 0, 1}; }
    /// e^{i phi} = cos phi + i sin phi.
    static Quaternion exp_i(double phi) noexcept { return {std::cos(phi), std::sin(phi), 0, 0}; }

    constexpr Quaternion conj() const noexcept { return {w, -x, -y, -z}; }
    /// a + bi + cj + dk -> a - bi + cj + dk, an antiautomorphism.
    constexpr Quaternion tilde() const noexcept { return {w, -x, y, z}; }

    constexpr double norm2() const noexcept { return w * w + x * x + y * y + z * z; }
    double norm() const noexcept { return std::sqrt(norm2()); }
    Quaternion normalized() const noexcept {
        const double n = norm();
        return {w / n, x / n, y / n, z / n};
    }

    constexpr Quaternion& operator+=(const Quaternion& o) noexcept {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) noexcept {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) noexcept {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }

    friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) noexcept { return a += b; }
    friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) noexcept { return a -= b; }
    friend constexpr Quaternion operator*(Quaternion a, double s) noexcept { return a *= s; }
    friend constexpr Quaternion operator*(double s, Quaternion a) noexcept { return a *= s; }

    friend constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) noexcept {
        return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
                p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
                p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
                p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
    }
};

/// Euclidean inner product on R^4.
constexpr double dot(const Quaternion& p, const Quaternion& q) noexcept {
    return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

}  // namespace ctori::hopf
