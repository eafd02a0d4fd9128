#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "fueterlab/catalog.hpp"
#include "fueterlab/diffops.hpp"
#include "fueterlab/errors.hpp"
#include "fueterlab/function.hpp"

using namespace fueterlab;
using std::numbers::pi;

namespace {

QFunction wrap(const oracle::Polynomial& poly) {
    return QFunction("poly", FunctionKind::Raw, [poly](const Quaternion& p) { return poly.value(p); });
}

SphericalPoint random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> t(-1.0, 1.0), r(0.5, 1.5), a(-2.5, 2.5), b(0.4, pi - 0.4);
    return {t(rng), r(rng), a(rng), b(rng)};
}

}  // namespace

TEST_CASE("scheme names") {
    CHECK(scheme_from_string("central") == Scheme::Central);
    CHECK(scheme_from_string("richardson") == Scheme::Richardson);
    CHECK(std::string(to_string(Scheme::Richardson)) == "richardson");
    CHECK_THROWS_AS(scheme_from_string("forward"), std::invalid_argument);
    CHECK_THROWS_AS((DiffConfig{0.0, Scheme::Central}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((DiffConfig{-1e-3, Scheme::Central}.validate()), std::invalid_argument);
    CHECK(Tolerance{}.at(2.0) == doctest::Approx(3e-6));
}

TEST_CASE("one-dimensional derivatives") {
    const Curve c = [](double s) { return Quaternion(std::sin(s), s * s, std::exp(s), 0.0); };
    const Derivative central = differentiate(c, {1e-4, Scheme::Central});
    CHECK(distance(central.value, Quaternion(1, 0, 1, 0)) < 1e-8);
    CHECK(central.estimated_error == 0.0);
    const Derivative rich = differentiate(c, {1e-2, Scheme::Richardson});
    CHECK(distance(rich.value, Quaternion(1, 0, 1, 0)) < 1e-9);
    CHECK(rich.estimated_error > 0.0);
    CHECK(rich.scale >= 1.0);
}

TEST_CASE("Fueter operators match exact polynomial derivatives") {
    std::mt19937_64 rng(29);
    for (int fi = 0; fi < 20; ++fi) {
        const oracle::Polynomial poly = oracle::Polynomial::random(rng);
        const QFunction f = wrap(poly);
        for (int k = 0; k < 20; ++k) {
            const SphericalPoint s = random_point(rng);
            const Quaternion p = s.to_quaternion();
            const Quaternion left = poly.fueter_left(p), right = poly.fueter_right(p);
            CHECK(distance(fueter_left(f, p).value, left) < 1e-8);
            CHECK(distance(fueter_right(f, p).value, right) < 1e-8);
            CHECK(distance(fueter_spherical(f, s).value, left) < 1e-7);
            CHECK(distance(fueter_spherical_right(f, s).value, right) < 1e-7);
            CHECK(distance(fueter_left(f, p, {1e-3, Scheme::Richardson}).value, left) < 1e-9);
        }
    }
}

TEST_CASE("Fueter images of basic functions") {
    const Quaternion p(0.3, -0.7, 0.2, 0.5);
    CHECK(distance(fueter_left(identity_function(), p).value, Quaternion(-2.0)) < 1e-9);
    CHECK(distance(fueter_right(identity_function(), p).value, Quaternion(-2.0)) < 1e-9);
    CHECK(fueter_left(constant(Quaternion(1, 2, 3, 4)), p).value.norm() < 1e-12);
    CHECK(fueter_right(constant(Quaternion(1, 2, 3, 4)), p).value.norm() < 1e-12);
    CHECK(distance(fueter_spherical(identity_function(), to_spherical(p)).value, Quaternion(-2.0)) < 1e-8);

    // v = log tan(pi / 4) = 0 on the equator, so the image vanishes there.
    CHECK(fueter_left(rho_function(), Quaternion(1, 1, 0, 0)).value.norm() < 1e-8);
}

TEST_CASE("left Fueter image of the class I witness") {
    // f = (x / r^2) Im p: left image is -2x/r^2 + (0, -z, y)/r^2.
    std::mt19937_64 rng(31);
    for (int k = 0; k < 100; ++k) {
        const Quaternion p = random_point(rng).to_quaternion();
        const double r2 = p.x * p.x + p.y * p.y + p.z * p.z;
        const Quaternion exact(-2.0 * p.x / r2, 0.0, -p.z / r2, p.y / r2);
        CHECK(distance(fueter_left(x_over_r_iota_function(), p).value, exact) < 1e-8);
    }
    const SphericalPoint s{0.0, 1.0, 0.4, 1.0};
    const double residual =
        (fueter_spherical(x_over_r_iota_function(), s).value + Quaternion(2.0 * std::cos(0.4) * std::sin(1.0))).norm();
    CHECK(residual == doctest::Approx(std::sqrt(1.0 - std::pow(std::cos(0.4) * std::sin(1.0), 2))).epsilon(1e-6));
}

TEST_CASE("class I residual") {
    std::mt19937_64 rng(37);
    for (int k = 0; k < 50; ++k) {
        const SphericalPoint s = random_point(rng);
        CHECK(class1_residual(power_function(3), s).value.norm() < 1e-8);
        CHECK(class1_residual(rho_function(), s).value.norm() < 1e-9);
        CHECK(distance(class1_residual(conjugate(identity_function()), s).value, Quaternion(2.0)) < 1e-8);
    }
}

TEST_CASE("imaginary derivative") {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 50; ++k) {
        const SphericalPoint s = random_point(rng);
        CHECK(distance(imaginary_derivative(identity_function(), s).value, Quaternion(2.0 * s.r)) < 1e-8);
        CHECK(imaginary_derivative(constant(Quaternion(3.0)), s).value.norm() < 1e-12);
        const double v = std::log(std::tan(s.beta / 2));
        CHECK(distance(imaginary_derivative(rho_function(), s).value, Quaternion(2.0 * v)) < 1e-8);
    }
}

TEST_CASE("decomposition of the left operator") {
    // fueter_left = class1 - imaginary_derivative / r
    std::mt19937_64 rng(43);
    for (const QFunction& f : {power_function(3), rho_function(), x_over_r_iota_function(), sigma_function()}) {
        for (int k = 0; k < 30; ++k) {
            const SphericalPoint s = random_point(rng);
            const Quaternion lhs = fueter_left(f, s.to_quaternion()).value;
            const Quaternion rhs = class1_residual(f, s).value - imaginary_derivative(f, s).value / s.r;
            CHECK(distance(lhs, rhs) < 1e-7);
        }
    }
}

TEST_CASE("spherical Cauchy-Riemann residuals") {
    std::mt19937_64 rng(47);
    for (int k = 0; k < 50; ++k) {
        const SphericalPoint s = random_point(rng);
        const CRResiduals rho = spherical_cr_residuals(rho_function(), s);
        CHECK(std::abs(rho.s1) < 1e-8);
        CHECK(std::abs(rho.s2) < 1e-8);
        const CRResiduals cube = spherical_cr_residuals(power_function(3), s);
        CHECK(std::abs(cube.s1) < 1e-8);
        CHECK(std::abs(cube.s2) < 1e-8);
        // u = 0, v = cos(a) sin(b)
        const CRResiduals xr = spherical_cr_residuals(x_over_r_iota_function(), s);
        CHECK(xr.s1 == doctest::Approx(-std::sin(s.alpha)).epsilon(1e-6));
        CHECK(xr.s2 == doctest::Approx(-std::cos(s.alpha) * std::cos(s.beta)).epsilon(1e-6));
    }
    const auto uv = [](double a, double b) { return std::pair{a, std::log(std::tan(b / 2))}; };
    const CRResiduals field = spherical_cr_residuals(uv, 0.3, 1.4);
    CHECK(std::abs(field.s1) < 1e-8);
    CHECK(std::abs(field.s2) < 1e-8);
    CHECK_THROWS_AS(spherical_cr_residuals(constant(Quaternion::j()), SphericalPoint{0, 1, 0, 1}), KindError);
}

TEST_CASE("chart margins") {
    CHECK_THROWS_AS(require_angular_margin({0.0, 1.0, 0.0, 0.05}), ChartSingularity);
    CHECK_THROWS_AS(require_angular_margin({0.0, 0.0, 0.0, 1.0}), ChartSingularity);
    CHECK_NOTHROW(require_angular_margin({0.0, 1.0, 0.0, 1.0}));
    CHECK_THROWS_AS(fueter_spherical(identity_function(), {0.0, 1.0, 0.0, 0.01}), ChartSingularity);
    CHECK_THROWS_AS(class1_residual(identity_function(), {0.0, 1e-6, 0.0, 1.0}), ChartSingularity);
    CHECK_THROWS_AS(fueter_left(identity_function(), Quaternion(), DiffConfig{0.0}), std::invalid_argument);
}

TEST_CASE("domain errors propagate from the stencil") {
    CHECK_THROWS_AS(fueter_left(x_over_r_iota_function(), Quaternion(1.0)), DomainError);
}

TEST_CASE("central differences converge at second order") {
    const QFunction cube = power_function(3);
    const Quaternion p(0.3, 0.5, -0.2, 0.7);
    const double r = p.imag_norm();
    const Quaternion exact(-2.0 * (3.0 * p.t * p.t - r * r));
    const double e1 = distance(fueter_left(cube, p, {1e-2}).value, exact);
    const double e2 = distance(fueter_left(cube, p, {5e-3}).value, exact);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));
    CHECK(e1 == doctest::Approx(4e-4).epsilon(1e-4));
}
