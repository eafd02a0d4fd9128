#pragma once

#include <functional>
#include <utility>

#include "fueterlab/function.hpp"
#include "fueterlab/quaternion.hpp"

namespace fueterlab {

enum class Scheme { Central, Richardson };

const char* to_string(Scheme scheme);
Scheme scheme_from_string(const std::string& name);

/// Finite-difference configuration. Richardson combines steps h and h/2.
struct DiffConfig {
    double h = 1e-5;
    Scheme scheme = Scheme::Central;

    /// Throws std::invalid_argument unless h > 0 and finite.
    void validate() const;
};

/// Residual tolerance: |residual| <= abs + rel * scale, scale = max |f| over the stencil.
struct Tolerance {
    double abs = 1e-6;
    double rel = 1e-6;

    double at(double scale) const { return abs + rel * scale; }
};

/// Angular operators require sin(beta) at least this large.
inline constexpr double kSinBetaMargin = 0.1;

struct OperatorValue {
    Quaternion value;
    double estimated_error = 0.0;  // Richardson difference magnitude, 0 for central
    double scale = 0.0;            // max |f| over the stencil
};

/// One directional derivative of a quaternion-valued curve.
struct Derivative {
    Quaternion value;
    double estimated_error = 0.0;
    double scale = 0.0;
};

using Curve = std::function<Quaternion(double)>;

/// d/ds curve(s) at s = 0.
Derivative differentiate(const Curve& curve, const DiffConfig& cfg);

/// All four partials in (t, x, y, z) from one stencil.
struct CartesianGradient {
    Quaternion dt, dx, dy, dz;
    double estimated_error = 0.0;
    double scale = 0.0;

    Quaternion left() const;   // dt + i dx + j dy + k dz
    Quaternion right() const;  // dt + dx i + dy j + dz k
};

/// All four partials in (t, r, alpha, beta) of f composed with the chart.
struct SphericalGradient {
    Quaternion dt, dr, dalpha, dbeta;
    double estimated_error = 0.0;
    double scale = 0.0;
};

CartesianGradient cartesian_gradient(const QFunction& f, const Quaternion& p, const DiffConfig& cfg);
SphericalGradient spherical_gradient(const QFunction& f, const SphericalPoint& s, const DiffConfig& cfg);

OperatorValue fueter_left(const QFunction& f, const Quaternion& p, const DiffConfig& cfg = {});
OperatorValue fueter_right(const QFunction& f, const Quaternion& p, const DiffConfig& cfg = {});

/// df/dt + iota df/dr at fixed (alpha, beta).
OperatorValue class1_residual(const QFunction& f, const SphericalPoint& s, const DiffConfig& cfg = {});

/// df/dt + iota df/dr - r^-1 iota_alpha^-1 df/dalpha - r^-1 iota_beta^-1 df/dbeta.
OperatorValue fueter_spherical(const QFunction& f, const SphericalPoint& s, const DiffConfig& cfg = {});

/// Mirror-order variant: every unit multiplies from the right.
OperatorValue fueter_spherical_right(const QFunction& f, const SphericalPoint& s,
                                     const DiffConfig& cfg = {});

/// iota_alpha^-1 df/dalpha + iota_beta^-1 df/dbeta.
OperatorValue imaginary_derivative(const QFunction& f, const SphericalPoint& s, const DiffConfig& cfg = {});

struct CRResiduals {
    double s1;  // dv/dalpha / sin(beta) + du/dbeta
    double s2;  // du/dalpha / sin(beta) - dv/dbeta
    double scale = 0.0;
};

/// Cauchy-Riemann residuals on the sphere for a CE function. Throws KindError for raw input.
CRResiduals spherical_cr_residuals(const QFunction& f, const SphericalPoint& s, const DiffConfig& cfg = {});

/// Same residuals for scalar fields u(alpha, beta), v(alpha, beta).
CRResiduals spherical_cr_residuals(const std::function<std::pair<double, double>(double, double)>& uv,
                                   double alpha, double beta, const DiffConfig& cfg = {});

/// Throws ChartSingularity if sin(beta) < kSinBetaMargin or r <= 0.
void require_angular_margin(const SphericalPoint& s);

}  // namespace fueterlab
