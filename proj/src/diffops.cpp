#include "fueterlab/diffops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fueterlab/errors.hpp"

namespace fueterlab {

const char* to_string(Scheme scheme) {
    return scheme == Scheme::Richardson ? "richardson" : "central";
}

Scheme scheme_from_string(const std::string& name) {
    if (name == "central") return Scheme::Central;
    if (name == "richardson") return Scheme::Richardson;
    throw std::invalid_argument("unknown difference scheme '" + name + "' (central|richardson)");
}

void DiffConfig::validate() const {
    if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("finite-difference step h must be > 0");
}

namespace {

struct CentralResult {
    Quaternion value;
    double scale;
};

CentralResult central(const Curve& curve, double h) {
    const Quaternion fp = curve(h);
    const Quaternion fm = curve(-h);
    return {(fp - fm) / (2.0 * h), std::max(fp.norm(), fm.norm())};
}

void require_chart(const SphericalPoint& s, double h) {
    if (!(s.r > 0.0)) throw ChartSingularity("chart singularity: r = 0");
    if (!(s.r - h > 0.0)) throw ChartSingularity("radial stencil crosses r = 0");
    if (std::sin(s.beta) <= 0.0) throw ChartSingularity("chart singularity: sin(beta) = 0");
}

}  // namespace

Derivative differentiate(const Curve& curve, const DiffConfig& cfg) {
    cfg.validate();
    if (cfg.scheme == Scheme::Central) {
        const CentralResult d = central(curve, cfg.h);
        return {d.value, 0.0, d.scale};
    }
    const CentralResult coarse = central(curve, cfg.h);
    const CentralResult fine = central(curve, cfg.h / 2.0);
    const Quaternion diff = fine.value - coarse.value;
    return {fine.value + diff / 3.0, diff.norm() / 3.0, std::max(coarse.scale, fine.scale)};
}

void require_angular_margin(const SphericalPoint& s) {
    if (!(s.r > 0.0)) throw ChartSingularity("chart singularity: r = 0");
    if (std::sin(s.beta) < kSinBetaMargin)
        throw ChartSingularity("sin(beta) below the angular margin " + std::to_string(kSinBetaMargin));
}

// ---------------------------------------------------------------- Cartesian

Quaternion CartesianGradient::left() const {
    return dt + Quaternion::i() * dx + Quaternion::j() * dy + Quaternion::k() * dz;
}

Quaternion CartesianGradient::right() const {
    return dt + dx * Quaternion::i() + dy * Quaternion::j() + dz * Quaternion::k();
}

CartesianGradient cartesian_gradient(const QFunction& f, const Quaternion& p, const DiffConfig& cfg) {
    const auto along = [&](const Quaternion& e) {
        return differentiate([&](double s) { return f(p + e * s); }, cfg);
    };
    const Derivative dt = along(Quaternion(1.0));
    const Derivative dx = along(Quaternion::i());
    const Derivative dy = along(Quaternion::j());
    const Derivative dz = along(Quaternion::k());
    return {dt.value,
            dx.value,
            dy.value,
            dz.value,
            dt.estimated_error + dx.estimated_error + dy.estimated_error + dz.estimated_error,
            std::max({dt.scale, dx.scale, dy.scale, dz.scale})};
}

OperatorValue fueter_left(const QFunction& f, const Quaternion& p, const DiffConfig& cfg) {
    const CartesianGradient g = cartesian_gradient(f, p, cfg);
    return {g.left(), g.estimated_error, g.scale};
}

OperatorValue fueter_right(const QFunction& f, const Quaternion& p, const DiffConfig& cfg) {
    const CartesianGradient g = cartesian_gradient(f, p, cfg);
    return {g.right(), g.estimated_error, g.scale};
}

// ---------------------------------------------------------------- Spherical

SphericalGradient spherical_gradient(const QFunction& f, const SphericalPoint& s, const DiffConfig& cfg) {
    require_chart(s, cfg.h);
    const Derivative dt = differentiate([&](double e) { return f(SphericalPoint{s.t + e, s.r, s.alpha, s.beta}); }, cfg);
    const Derivative dr = differentiate([&](double e) { return f(SphericalPoint{s.t, s.r + e, s.alpha, s.beta}); }, cfg);
    const Derivative da = differentiate([&](double e) { return f(SphericalPoint{s.t, s.r, s.alpha + e, s.beta}); }, cfg);
    const Derivative db = differentiate([&](double e) { return f(SphericalPoint{s.t, s.r, s.alpha, s.beta + e}); }, cfg);
    const double sb = std::sin(s.beta);
    return {dt.value,
            dr.value,
            da.value,
            db.value,
            dt.estimated_error + dr.estimated_error + da.estimated_error / (s.r * sb) + db.estimated_error / s.r,
            std::max({dt.scale, dr.scale, da.scale, db.scale})};
}

OperatorValue class1_residual(const QFunction& f, const SphericalPoint& s, const DiffConfig& cfg) {
    require_chart(s, cfg.h);
    const Derivative dt = differentiate([&](double e) { return f(SphericalPoint{s.t + e, s.r, s.alpha, s.beta}); }, cfg);
    const Derivative dr = differentiate([&](double e) { return f(SphericalPoint{s.t, s.r + e, s.alpha, s.beta}); }, cfg);
    return {dt.value + iota(s) * dr.value, dt.estimated_error + dr.estimated_error, std::max(dt.scale, dr.scale)};
}

OperatorValue fueter_spherical(const QFunction& f, const SphericalPoint& s, const DiffConfig& cfg) {
    require_angular_margin(s);
    const SphericalGradient g = spherical_gradient(f, s, cfg);
    const Quaternion angular = inv(iota_alpha(s)) * g.dalpha + inv(iota_beta(s)) * g.dbeta;
    return {g.dt + iota(s) * g.dr - angular / s.r, g.estimated_error, g.scale};
}

OperatorValue fueter_spherical_right(const QFunction& f, const SphericalPoint& s, const DiffConfig& cfg) {
    require_angular_margin(s);
    const SphericalGradient g = spherical_gradient(f, s, cfg);
    const Quaternion angular = g.dalpha * inv(iota_alpha(s)) + g.dbeta * inv(iota_beta(s));
    return {g.dt + g.dr * iota(s) - angular / s.r, g.estimated_error, g.scale};
}

OperatorValue imaginary_derivative(const QFunction& f, const SphericalPoint& s, const DiffConfig& cfg) {
    require_angular_margin(s);
    const Derivative da = differentiate([&](double e) { return f(SphericalPoint{s.t, s.r, s.alpha + e, s.beta}); }, cfg);
    const Derivative db = differentiate([&](double e) { return f(SphericalPoint{s.t, s.r, s.alpha, s.beta + e}); }, cfg);
    const double sb = std::sin(s.beta);
    return {inv(iota_alpha(s)) * da.value + inv(iota_beta(s)) * db.value,
            da.estimated_error / sb + db.estimated_error, std::max(da.scale, db.scale)};
}

CRResiduals spherical_cr_residuals(const std::function<std::pair<double, double>(double, double)>& uv,
                                   double alpha, double beta, const DiffConfig& cfg) {
    const double sb = std::sin(beta);
    if (sb < kSinBetaMargin)
        throw ChartSingularity("sin(beta) below the angular margin " + std::to_string(kSinBetaMargin));
    // Pack (u, v) into the first two quaternion slots to reuse the curve differentiator.
    const auto packed = [&](double a, double b) {
        const auto [u, v] = uv(a, b);
        return Quaternion(u, v, 0.0, 0.0);
    };
    const Derivative da = differentiate([&](double e) { return packed(alpha + e, beta); }, cfg);
    const Derivative db = differentiate([&](double e) { return packed(alpha, beta + e); }, cfg);
    const double du_da = da.value.t, dv_da = da.value.x;
    const double du_db = db.value.t, dv_db = db.value.x;
    return {dv_da / sb + du_db, du_da / sb - dv_db, std::max(da.scale, db.scale)};
}

CRResiduals spherical_cr_residuals(const QFunction& f, const SphericalPoint& s, const DiffConfig& cfg) {
    if (!f.is_ce()) throw KindError("spherical CR residuals need a CE function, got raw '" + f.name() + "'");
    require_angular_margin(s);
    return spherical_cr_residuals(
        [&](double a, double b) {
            const CEParts parts = decompose(f, SphericalPoint{s.t, s.r, a, b});
            return std::pair{parts.u, parts.v};
        },
        s.alpha, s.beta, cfg);
}

}  // namespace fueterlab
