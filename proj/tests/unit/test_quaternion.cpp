#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

#include "fueterlab/errors.hpp"
#include "fueterlab/quaternion.hpp"

using namespace fueterlab;
using std::numbers::pi;

namespace {

Quaternion random_quaternion(std::mt19937_64& rng, double span = 2.0) {
    std::uniform_real_distribution<double> d(-span, span);
    return {d(rng), d(rng), d(rng), d(rng)};
}

}  // namespace

TEST_CASE("basis products") {
    CHECK(Quaternion::i() * Quaternion::j() == Quaternion::k());
    CHECK(Quaternion::j() * Quaternion::k() == Quaternion::i());
    CHECK(Quaternion::k() * Quaternion::i() == Quaternion::j());
    CHECK(Quaternion::j() * Quaternion::i() == -Quaternion::k());
    for (const Quaternion u : {Quaternion::i(), Quaternion::j(), Quaternion::k()}) CHECK(u * u == Quaternion(-1.0));
    CHECK((Quaternion(1, 1, 0, 0) * Quaternion(1, 0, 1, 0)) == Quaternion(1, 1, 1, 1));
}

TEST_CASE("Hamilton product agrees with the left-multiplication matrix") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 500; ++k) {
        const Quaternion a = random_quaternion(rng), b = random_quaternion(rng);
        CHECK(oracle::close(a * b, oracle::hamilton(a, b)) < 1e-14);
    }
}

TEST_CASE("algebraic laws hold on random samples") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 300; ++k) {
        const Quaternion a = random_quaternion(rng), b = random_quaternion(rng), c = random_quaternion(rng);
        CHECK(distance((a * b) * c, a * (b * c)) < 1e-12);
        CHECK(distance(a * (b + c), a * b + a * c) < 1e-12);
        CHECK(distance((a * b).conj(), b.conj() * a.conj()) < 1e-12);
        CHECK(std::abs((a * b).norm() - a.norm() * b.norm()) < 1e-12);
        CHECK(distance(a * inv(a), Quaternion(1.0)) < 1e-12);
        CHECK(distance(inv(a) * a, Quaternion(1.0)) < 1e-12);
    }
}

TEST_CASE("inverse") {
    CHECK(inv(Quaternion::i()) == -Quaternion::i());
    CHECK(inv(Quaternion(2.0)) == Quaternion(0.5));
    CHECK_THROWS_AS(inv(Quaternion()), DomainError);

    const double a = 0.7, b = 1.2;
    const Quaternion expected = Quaternion::imaginary(std::sin(a), -std::cos(a), 0.0) / std::sin(b);
    CHECK(distance(inv(iota_alpha(a, b)), expected) < 1e-14);
    CHECK(distance(inv(iota_beta(a, b)), -iota_beta(a, b)) < 1e-14);
}

TEST_CASE("integer powers") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; ++k) {
        const Quaternion p = random_quaternion(rng);
        Quaternion acc(1.0);
        for (int n = 0; n <= 6; ++n) {
            CHECK(distance(pow(p, n), acc) < 1e-12 * (1.0 + acc.norm()));
            acc = acc * p;
        }
        CHECK(distance(pow(p, -2), inv(p * p)) < 1e-10 * (1.0 + inv(p * p).norm()));
    }
    CHECK(pow(Quaternion(), 0) == Quaternion(1.0));
    CHECK_THROWS_AS(pow(Quaternion(), -1), DomainError);
}

TEST_CASE("unit imaginary squares to -1") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(-pi, pi);
    for (int k = 0; k < 200; ++k) {
        const double a = angle(rng), b = std::abs(angle(rng));
        CHECK(distance(iota(a, b) * iota(a, b), Quaternion(-1.0)) < 1e-14);
        // iota is orthogonal to both tangent vectors.
        CHECK(std::abs(imag_dot(iota(a, b), iota_alpha(a, b))) < 1e-14);
        CHECK(std::abs(imag_dot(iota(a, b), iota_beta(a, b))) < 1e-14);
        CHECK(std::abs(iota_alpha(a, b).norm() - std::abs(std::sin(b))) < 1e-14);
    }
}

TEST_CASE("tangent vectors match finite differences of iota") {
    const double a = 0.4, b = 2.1, h = 1e-6;
    const Quaternion da = (iota(a + h, b) - iota(a - h, b)) / (2 * h);
    const Quaternion db = (iota(a, b + h) - iota(a, b - h)) / (2 * h);
    CHECK(distance(da, iota_alpha(a, b)) < 1e-9);
    CHECK(distance(db, iota_beta(a, b)) < 1e-9);
}

TEST_CASE("iota values at the x-axis") {
    CHECK(distance(iota(0.0, pi / 2), Quaternion::i()) < 1e-15);
    CHECK(distance(iota_alpha(0.0, pi / 2), Quaternion::j()) < 1e-15);
    CHECK(distance(iota_beta(0.0, pi / 2), -Quaternion::k()) < 1e-15);
}

TEST_CASE("spherical chart") {
    const SphericalPoint a = to_spherical(Quaternion(1, 1, 0, 0));
    CHECK(a.t == 1.0);
    CHECK(a.r == doctest::Approx(1.0));
    CHECK(a.alpha == doctest::Approx(0.0));
    CHECK(a.beta == doctest::Approx(pi / 2));

    const SphericalPoint b = to_spherical(Quaternion(2, 0, 3, 0));
    CHECK(b.r == doctest::Approx(3.0));
    CHECK(b.alpha == doctest::Approx(pi / 2));
    CHECK(b.beta == doctest::Approx(pi / 2));

    CHECK_THROWS_AS(to_spherical(Quaternion(1, 0, 0, 1)), ChartSingularity);
    CHECK_THROWS_AS(to_spherical(Quaternion(1, 0, 0, -2)), ChartSingularity);
    CHECK_THROWS_AS(to_spherical(Quaternion(4.0)), ChartSingularity);
    CHECK(to_spherical(Quaternion(0, -1, 0, 0.5)).alpha == doctest::Approx(pi));
}

TEST_CASE("chart round trip") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 1000; ++k) {
        const Quaternion p = random_quaternion(rng);
        const SphericalPoint s = to_spherical(p);
        CHECK(s.r > 0.0);
        CHECK(s.beta > 0.0);
        CHECK(s.beta < pi);
        CHECK(s.alpha > -pi);
        CHECK(s.alpha <= pi);
        CHECK(distance(s.to_quaternion(), p) < 1e-12);
        CHECK(distance(iota_of(p), iota(s)) < 1e-12);
    }
}

TEST_CASE("iota_of rejects real input") {
    CHECK_THROWS_AS(iota_of(Quaternion(3.0)), ChartSingularity);
}

TEST_CASE("stream output") {
    std::ostringstream os;
    os << Quaternion(1, -2, 0.5, 0);
    CHECK(!os.str().empty());
}
