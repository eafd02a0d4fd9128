// One line per acceptance criterion; exit status 0 iff every criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "fueterlab/catalog.hpp"
#include "fueterlab/classify.hpp"
#include "fueterlab/generators.hpp"
#include "fueterlab/laurent.hpp"
#include "fueterlab/verify.hpp"

using namespace fueterlab;

namespace {

// Pinned tolerances.
constexpr double kOperatorEquivalence = 1e-6;
constexpr double kOperatorRuntimeSeconds = 10.0;
constexpr double kCauchyRiemann = 1e-5;
constexpr double kWitnessResidualFloor = 1e-2;
constexpr double kJacobianRelative = 1e-4;
constexpr double kJacobianExact = 1e-6;
constexpr double kRinehartRegular = 1e-5;
constexpr double kRinehartClosedForm = 1e-10;
constexpr double kImaginaryDerivative = 1e-5;
constexpr double kChiralRegular = 1e-4;
constexpr double kChiralCentral = 1e-8;
constexpr double kLaurentSquare = 1e-9;
constexpr double kLaurentClass = 1e-5;
constexpr double kMirrorClass = 1e-5;
constexpr double kMirrorInvolution = 1e-12;
constexpr double kOrderLow = 3.3;
constexpr double kOrderHigh = 4.7;
constexpr double kSuiteSeconds = 120.0;

struct Outcome {
    bool passed;
    std::string summary;
};

int failures = 0;

void report(int id, const char* name, const std::function<Outcome()>& body) {
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.passed) ++failures;
    std::printf("[%s] %2d %-28s %s\n", out.passed ? "PASS" : "FAIL", id, name, out.summary.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

template <typename Fn>
double grid_max(const SampleGrid& grid, Fn&& fn) {
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) worst = std::max(worst, fn(grid.point(i)));
    return worst;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
    const auto suite_start = std::chrono::steady_clock::now();
    const SampleGrid grid = SampleGrid::default_grid();
    const DiffConfig cfg{1e-5, Scheme::Central};
    const Tolerance tol;

    report(1, "operator_equivalence", [&] {
        const auto start = std::chrono::steady_clock::now();
        std::mt19937_64 rng(2024);
        double worst = 0.0;
        for (int fi = 0; fi < 20; ++fi) {
            const QFunction f = random_polynomial_function(rng, "poly");
            for (int k = 0; k < 200; ++k) {
                const SphericalPoint s = random_grid_point(rng);
                worst = std::max(worst, distance(fueter_spherical(f, s, cfg).value,
                                                 fueter_left(f, s.to_quaternion(), cfg).value));
            }
        }
        const double elapsed = seconds_since(start);
        return Outcome{worst <= kOperatorEquivalence && elapsed < kOperatorRuntimeSeconds,
                       fmt("max %.3g (tol %.0e), %.2f s", worst, kOperatorEquivalence, elapsed)};
    });

    report(2, "witness_classification", [&] {
        std::string bad;
        bool chain = true;
        const auto expect = [&](const QFunction& f, bool i, bool ii, bool iii, bool check_iii) {
            const ClassificationReport r = classify(f, grid, cfg, tol);
            chain = chain && r.inclusion_consistent;
            if (r.class_I.passed() != i || r.class_II.passed() != ii || (check_iii && r.class_III.passed() != iii))
                bad += " " + f.name();
        };
        for (const QFunction& f : {rho_function(), varrho_function(), sigma_function()}) expect(f, true, true, false, true);
        expect(x_over_r_iota_function(), true, false, false, false);
        for (int n = -2; n <= 4; ++n) expect(power_function(n), true, true, true, true);
        return Outcome{bad.empty() && chain, bad.empty() ? std::string("12 witnesses as expected, inclusion chain intact")
                                                         : "mismatch:" + bad};
    });

    report(3, "spherical_cauchy_riemann", [&] {
        const auto cr_max = [&](const QFunction& f) {
            return grid_max(grid, [&](const SphericalPoint& s) {
                const CRResiduals r = spherical_cr_residuals(f, s, cfg);
                return std::max(std::abs(r.s1), std::abs(r.s2));
            });
        };
        double worst = 0.0;
        int tested = 0;
        for (const WitnessEntry& e : witness_catalog()) {
            if (!classify(e.function, grid, cfg, tol).class_II.passed()) continue;
            worst = std::max(worst, cr_max(e.function));
            ++tested;
        }
        const double witness = cr_max(x_over_r_iota_function());
        return Outcome{worst < kCauchyRiemann && witness > kWitnessResidualFloor,
                       fmt("class II max %.3g over %g functions; x-over-r-iota %.3g", worst, tested, witness)};
    });

    report(4, "jacobian_formula", [&] {
        std::mt19937_64 rng(99);
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const JacobianResult j = jacobian_check(power_function(2), random_grid_point(rng).to_quaternion(), cfg, tol);
            worst = std::max(worst, std::abs(j.det_numeric - j.det_formula) / (1.0 + std::abs(j.det_formula)));
        }
        const JacobianResult at = jacobian_check(power_function(2), Quaternion(1, 1, 0, 0), cfg, tol);
        const double exact = std::max(std::abs(at.det_numeric - 32.0), std::abs(at.det_formula - 32.0));
        return Outcome{worst < kJacobianRelative && exact < kJacobianExact,
                       fmt("relative max %.3g; |det - 32| %.3g", worst, exact)};
    });

    report(5, "rinehart_pipeline", [&] {
        double worst = 0.0;
        for (const int n : {1, 2, 3, 4, -1}) {
            const QFunction f = ci_extend_rinehart(rinehart_L(ComplexStem::monomial(n)), grid, tol);
            worst = std::max(worst, grid_max(grid, [&](const SphericalPoint& s) {
                                 return fueter_left(f, s.to_quaternion(), cfg).value.norm();
                             }));
        }
        const ComplexField l2 = rinehart_L(ComplexStem::monomial(2));
        const ComplexField l3 = rinehart_L(ComplexStem::monomial(3));
        double closed = 0.0;
        for (const SphericalPoint& s : grid.points()) {
            const std::complex<double> z(s.t, s.r);
            closed = std::max(closed, std::abs(l2(z) + 2.0));
            closed = std::max(closed, std::abs(l3(z) - std::complex<double>(-6.0 * s.t, -2.0 * s.r)));
        }
        return Outcome{worst < kRinehartRegular && closed < kRinehartClosedForm,
                       fmt("max |fueter_left| %.3g; closed forms %.3g", worst, closed)};
    });

    report(6, "imaginary_derivative", [&] {
        double worst = 0.0;
        for (const WitnessEntry& e : witness_catalog()) {
            if (!e.expected.class_II.value_or(false)) continue;
            worst = std::max(worst, grid_max(grid, [&](const SphericalPoint& s) {
                                 const double v = decompose(e.function, s).v;
                                 return distance(imaginary_derivative(e.function, s, cfg).value, Quaternion(2.0 * v));
                             }));
        }
        return Outcome{worst < kImaginaryDerivative, fmt("max %.3g (tol %.0e)", worst, kImaginaryDerivative)};
    });

    report(7, "chiral_difference", [&] {
        const DiffConfig outer{1e-4, Scheme::Richardson};
        const QFunction delta = chiral_difference(rho_function(), kChiralInnerConfig, grid);
        const double regular = grid_max(grid, [&](const SphericalPoint& s) {
            return fueter_left(delta, s.to_quaternion(), outer).value.norm();
        });
        const QFunction cube = chiral_difference(power_function(3), kChiralInnerConfig, grid);
        const double central = grid_max(grid, [&](const SphericalPoint& s) { return cube(s).norm(); });
        return Outcome{regular < kChiralRegular && central < kChiralCentral,
                       fmt("fueter_left(delta rho) %.3g; delta p^3 %.3g", regular, central)};
    });

    report(8, "centrality", [&] {
        std::string bad;
        for (const WitnessEntry& e : witness_catalog())
            if (centrality_check(e.function, grid, cfg, tol).passed() != classify(e.function, grid, cfg, tol).class_III.passed())
                bad += " " + e.name;
        return Outcome{bad.empty(), bad.empty() ? std::string("agreement on all 12 catalog entries") : "mismatch:" + bad};
    });

    report(9, "laurent", [&] {
        const AnnulusRegion region;  // c = i, radii (0.2, 0.6)
        const LaurentSeries square = laurent_coefficients(power_function(2), region, -8, 8, 64);
        const std::complex<double> expected[3] = {-1.0, {0.0, 2.0}, 1.0};
        double coeff = 0.0;
        for (int ia = 0; ia < region.window_points; ++ia)
            for (int ib = 0; ib < region.window_points; ++ib)
                for (int n = 0; n < 3; ++n) coeff = std::max(coeff, std::abs(square.coefficient(n, ia, ib) - expected[n]));

        const LaurentSeries inverse = laurent_coefficients(power_function(-1), region, -20, 20, 128);
        double tail = 0.0;
        for (const double rho : {0.25, 0.4, 0.55}) {
            const double ratio = rho / region.c2;
            const double bound = std::pow(ratio, 21) / (1.0 - ratio) + roundoff_floor(rho, region, 20, 1.0 / (region.c2 - rho));
            for (int k = 0; k < 8; ++k) {
                const std::complex<double> z = region.center() + std::polar(rho, 2.0 * std::numbers::pi * (k + 0.5) / 8.0);
                const Quaternion p = SphericalPoint{z.real(), z.imag(), -0.7, 1.9}.to_quaternion();
                tail = std::max(tail, distance(reconstruct(inverse, p), inv(p)) / bound);
            }
        }

        // varrho = atan(y / z) + ... jumps across z = 0, so its window stays in the northern hemisphere.
        AnnulusRegion north = region;
        north.beta = {0.3, 1.3};
        const std::vector<std::pair<QFunction, AnnulusRegion>> sources = {
            {rho_function(), region},     {product(rho_function(), identity_function()), region},
            {power_function(2), region},  {power_function(-1), region},
            {varrho_function(), north},   {sigma_function(), north}};
        double cr = 0.0;
        for (const auto& [f, window] : sources) {
            for (const CoefficientVerdict& v : coefficient_class_check(laurent_coefficients(f, window, -4, 4, 64), cfg, tol))
                cr = std::max(cr, v.max_residual);
        }
        return Outcome{coeff < kLaurentSquare && tail <= 1.0 && cr < kLaurentClass,
                       fmt("p^2 coefficients %.3g; tail ratio %.3g; coefficient CR %.3g", coeff, tail, cr)};
    });

    report(10, "mirror", [&] {
        const QFunction rho = rho_function();
        const ClassStats right = right_class2_check(mirror(rho), grid, cfg, tol);
        const QFunction twice = mirror(mirror(rho));
        const double involution = grid_max(grid, [&](const SphericalPoint& s) { return distance(twice(s), rho(s)); });
        return Outcome{right.passed() && right.max < kMirrorClass && involution < kMirrorInvolution,
                       fmt("right class II max %.3g; involution %.3g", right.max, involution)};
    });

    report(11, "convergence_order", [&] {
        const QFunction cube = power_function(3);
        double lo = 1e300, hi = 0.0;
        std::mt19937_64 rng(7);
        for (int k = 0; k < 10; ++k) {
            const SphericalPoint s = random_grid_point(rng);
            const Quaternion p = s.to_quaternion();
            const Quaternion exact(-2.0 * (3.0 * s.t * s.t - s.r * s.r));
            const double e1 = distance(fueter_left(cube, p, {1e-2, Scheme::Central}).value, exact);
            const double e2 = distance(fueter_left(cube, p, {5e-3, Scheme::Central}).value, exact);
            lo = std::min(lo, e1 / e2);
            hi = std::max(hi, e1 / e2);
        }
        return Outcome{lo >= kOrderLow && hi <= kOrderHigh, fmt("error ratio in [%.4f, %.4f]", lo, hi)};
    });

    const double total = seconds_since(suite_start);
    const bool fast = total < kSuiteSeconds;
    if (!fast) ++failures;
    std::printf("[%s]    suite runtime %.2f s (limit %.0f s)\n", fast ? "PASS" : "FAIL", total, kSuiteSeconds);
    std::printf("%s: %d failing\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
