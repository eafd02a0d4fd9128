#include "fueterlab/quaternion.hpp"

#include <ostream>

#include "fueterlab/errors.hpp"

namespace fueterlab {

Quaternion inv(const Quaternion& p) {
    const double n2 = p.norm2();
    if (n2 == 0.0) throw DomainError("inverse of the zero quaternion");
    return p.conj() / n2;
}

Quaternion pow(const Quaternion& p, int n) {
    Quaternion base = n < 0 ? inv(p) : p;
    unsigned e = n < 0 ? static_cast<unsigned>(-(n + 1)) + 1u : static_cast<unsigned>(n);
    Quaternion result{1.0};
    // Powers of a single quaternion commute, so square-and-multiply is exact in order.
    while (e != 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.t << ", " << q.x << ", " << q.y << ", " << q.z << ')';
}

Quaternion SphericalPoint::to_quaternion() const {
    const double sb = std::sin(beta);
    return {t, r * std::cos(alpha) * sb, r * std::sin(alpha) * sb, r * std::cos(beta)};
}

SphericalPoint to_spherical(const Quaternion& p) {
    const double rho = std::hypot(p.x, p.y);
    const double r = std::hypot(rho, p.z);
    if (r == 0.0) throw ChartSingularity("chart singularity: point on the real axis (r = 0)");
    if (rho == 0.0) throw ChartSingularity("chart singularity: point on the z-axis (sin beta = 0)");
    double alpha = std::atan2(p.y, p.x);
    if (alpha == -std::numbers::pi) alpha = std::numbers::pi;
    // atan2 form of arccos(z / r), accurate near the poles.
    const double beta = std::atan2(rho, p.z);
    return {p.t, r, alpha, beta};
}

Quaternion iota_of(const Quaternion& p) {
    const double r = p.imag_norm();
    if (r == 0.0) throw ChartSingularity("chart singularity: point on the real axis (r = 0)");
    return p.imag() / r;
}

}  // namespace fueterlab
