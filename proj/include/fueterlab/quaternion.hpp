#pragma once

#include <array>
#include <cmath>
#include <iosfwd>
#include <numbers>

namespace fueterlab {

/// Element t + x i + y j + z k of the real quaternion algebra.
struct Quaternion {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double t_, double x_, double y_, double z_) : t(t_), x(x_), y(y_), z(z_) {}
    // Implicit: real scalars embed as t + 0i + 0j + 0k.
    constexpr Quaternion(double real) : t(real) {}  // NOLINT(google-explicit-constructor)

    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }
    static constexpr Quaternion imaginary(double x_, double y_, double z_) { return {0.0, x_, y_, z_}; }

    constexpr double real() const { return t; }
    constexpr Quaternion imag() const { return {0.0, x, y, z}; }
    constexpr Quaternion conj() const { return {t, -x, -y, -z}; }
    constexpr double norm2() const { return t * t + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }
    // |Im p|, the radial coordinate r.
    double imag_norm() const { return std::sqrt(x * x + y * y + z * z); }
    constexpr std::array<double, 4> components() const { return {t, x, y, z}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        t += o.t; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        t -= o.t; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        t *= s; x *= s; y *= s; z *= s;
        return *this;
    }
    constexpr Quaternion& operator/=(double s) {
        t /= s; x /= s; y /= s; z /= s;
        return *this;
    }

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.t, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

/// Hamilton product.
constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) {
    return {a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z,
            a.t * b.x + a.x * b.t + a.y * b.z - a.z * b.y,
            a.t * b.y - a.x * b.z + a.y * b.t + a.z * b.x,
            a.t * b.z + a.x * b.y - a.y * b.x + a.z * b.t};
}
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return mul(a, b); }

/// Multiplicative inverse; throws DomainError for the zero quaternion.
Quaternion inv(const Quaternion& p);

/// Integer power by repeated multiplication; negative n goes through inv().
Quaternion pow(const Quaternion& p, int n);

inline double distance(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

// Euclidean dot product of the imaginary parts.
constexpr double imag_dot(const Quaternion& a, const Quaternion& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// The chart p = t + r * iota(alpha, beta).
struct SphericalPoint {
    double t = 0.0;
    double r = 0.0;
    double alpha = 0.0;  // azimuth in (-pi, pi]
    double beta = 0.0;   // polar angle in (0, pi)

    Quaternion to_quaternion() const;
};

/// Throws ChartSingularity on the real axis (r = 0) and on the z-axis (sin beta = 0).
SphericalPoint to_spherical(const Quaternion& p);

inline Quaternion to_cartesian(const SphericalPoint& s) { return s.to_quaternion(); }

/// Unit imaginary quaternion (cos a sin b, sin a sin b, cos b).
inline Quaternion iota(double alpha, double beta) {
    const double sb = std::sin(beta);
    return Quaternion::imaginary(std::cos(alpha) * sb, std::sin(alpha) * sb, std::cos(beta));
}

/// d iota / d alpha = (-sin a sin b, cos a sin b, 0); squared norm sin^2 b.
inline Quaternion iota_alpha(double alpha, double beta) {
    const double sb = std::sin(beta);
    return Quaternion::imaginary(-std::sin(alpha) * sb, std::cos(alpha) * sb, 0.0);
}

/// d iota / d beta = (cos a cos b, sin a cos b, -sin b); unit norm.
inline Quaternion iota_beta(double alpha, double beta) {
    const double cb = std::cos(beta);
    return Quaternion::imaginary(std::cos(alpha) * cb, std::sin(alpha) * cb, -std::sin(beta));
}

inline Quaternion iota(const SphericalPoint& s) { return iota(s.alpha, s.beta); }
inline Quaternion iota_alpha(const SphericalPoint& s) { return iota_alpha(s.alpha, s.beta); }
inline Quaternion iota_beta(const SphericalPoint& s) { return iota_beta(s.alpha, s.beta); }

/// Unit imaginary direction Im(p)/|Im(p)|; throws ChartSingularity when Im(p) = 0.
Quaternion iota_of(const Quaternion& p);

}  // namespace fueterlab
