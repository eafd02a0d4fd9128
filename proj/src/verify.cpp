#include "fueterlab/verify.hpp"

#include <algorithm>
#include <array>
#include <complex>
#include <limits>
#include <numbers>
#include <cmath>
#include <exception>
#include <functional>
#include <sstream>

#include "fueterlab/catalog.hpp"
#include "fueterlab/classify.hpp"
#include "fueterlab/generators.hpp"
#include "fueterlab/laurent.hpp"

namespace fueterlab {

bool VerifySummary::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

struct Monomial {
    Quaternion coefficient;
    std::array<int, 4> powers;
};

std::vector<Monomial> random_monomials(std::mt19937_64& rng) {
    const int count = 2 + static_cast<int>(rng() % 4);
    std::vector<Monomial> terms;
    for (int k = 0; k < count; ++k) {
        Monomial m{{uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)}, {0, 0, 0, 0}};
        const int degree = 1 + static_cast<int>(rng() % 3);
        for (int d = 0; d < degree; ++d) ++m.powers[rng() % 4];
        terms.push_back(m);
    }
    return terms;
}

Quaternion evaluate(const std::vector<Monomial>& terms, const Quaternion& p) {
    const auto c = p.components();
    Quaternion acc;
    for (const Monomial& m : terms) {
        double scalar = 1.0;
        for (std::size_t a = 0; a < 4; ++a) scalar *= std::pow(c[a], m.powers[a]);
        acc += m.coefficient * scalar;
    }
    return acc;
}

CheckResult run_check(const std::string& name, const std::function<CheckResult()>& body) {
    try {
        CheckResult result = body();
        result.name = name;
        return result;
    } catch (const std::exception& e) {
        return {name, false, std::numeric_limits<double>::infinity(), 0.0, std::string("error: ") + e.what()};
    }
}

CheckResult bound_check(double residual, double threshold, std::string detail = {}) {
    return {"", residual <= threshold, residual, threshold, std::move(detail)};
}

std::vector<WitnessEntry> class2_entries() {
    std::vector<WitnessEntry> out;
    for (WitnessEntry& e : witness_catalog())
        if (e.expected.class_II.value_or(false)) out.push_back(std::move(e));
    return out;
}

template <typename Fn>
double grid_max(const SampleGrid& grid, Fn&& fn) {
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) worst = std::max(worst, fn(grid.point(i)));
    return worst;
}

}  // namespace

double roundoff_floor(double rho, const AnnulusRegion& region, int n_abs_max, double f_max) {
    // Each a_n carries about eps |f| rho_c^{-n} of rounding, amplified by rho^n in the partial sum.
    const double q = rho / region.contour_radius();
    double sum = 0.0;
    for (int n = -n_abs_max; n <= n_abs_max; ++n) sum += std::pow(q, n);
    return std::numeric_limits<double>::epsilon() * f_max * sum;
}

QFunction random_polynomial_function(std::mt19937_64& rng, const std::string& name) {
    auto first = random_monomials(rng);
    const bool compose = rng() % 2 == 0;
    auto second = compose ? random_monomials(rng) : std::vector<Monomial>{};
    return QFunction(name, FunctionKind::Raw, [first, second, compose](const Quaternion& p) {
        const Quaternion a = evaluate(first, p);
        return compose ? a * evaluate(second, p) : a;
    });
}

SphericalPoint random_grid_point(std::mt19937_64& rng) {
    const SampleGrid g = SampleGrid::default_grid();
    return {uniform(rng, g.t().lo, g.t().hi), uniform(rng, g.r().lo, g.r().hi),
            uniform(rng, g.alpha().lo, g.alpha().hi), uniform(rng, g.beta().lo, g.beta().hi)};
}

VerifySummary verify_props(const VerifyOptions& options) {
    const SampleGrid grid = SampleGrid::default_grid();
    const Tolerance& tol = options.tolerance;
    const auto config = [&](double pinned_h, Scheme pinned_scheme = Scheme::Central) {
        DiffConfig cfg{options.h.value_or(pinned_h), options.scheme.value_or(pinned_scheme)};
        cfg.validate();
        return cfg;
    };
    const DiffConfig cfg = config(1e-5);
    VerifySummary summary;
    auto& checks = summary.checks;

    checks.push_back(run_check("operator_equivalence", [&] {
        std::mt19937_64 rng(options.seed);
        double worst = 0.0;
        for (int fi = 0; fi < 20; ++fi) {
            const QFunction f = random_polynomial_function(rng, "poly" + std::to_string(fi));
            for (int k = 0; k < 200; ++k) {
                const SphericalPoint s = random_grid_point(rng);
                const Quaternion diff = fueter_spherical(f, s, cfg).value - fueter_left(f, s.to_quaternion(), cfg).value;
                worst = std::max(worst, diff.norm());
            }
        }
        return bound_check(worst, 1e-6, "20 random polynomials x 200 points");
    }));

    checks.push_back(run_check("closure", [&] {
        std::mt19937_64 rng(options.seed + 1);
        struct Case {
            QFunction f;
            bool expect_class_III;
        };
        std::vector<Case> cases;
        for (int k = 0; k < 3; ++k) {
            const int a = static_cast<int>(rng() % 5) - 1;
            const int b = static_cast<int>(rng() % 5) - 1;
            const double c = uniform(rng, -2.0, 2.0);
            cases.push_back({product(power_function(a), power_function(b)), true});
            cases.push_back({sum(scaled(power_function(a), c), power_function(b)), true});
        }
        cases.push_back({reciprocal(identity_function()), true});
        cases.push_back({product(rho_function(), power_function(2)), false});
        cases.push_back({product(power_function(2), rho_function()), false});
        cases.push_back({sum(rho_function(), sigma_function()), false});
        cases.push_back({product(rho_function(), varrho_function()), false});
        cases.push_back({reciprocal(sum(rho_function(), constant(3.0))), false});
        double worst = 0.0;
        std::string failures;
        for (const Case& c : cases) {
            const ClassificationReport r = classify(c.f, grid, cfg, tol);
            const ClassStats& target = c.expect_class_III ? r.class_III : r.class_II;
            worst = std::max(worst, target.max_ratio);
            if (!target.passed() || !r.inclusion_consistent) failures += " " + c.f.name();
        }
        CheckResult out{"", failures.empty(), worst, kMaxToleranceMultiple,
                        failures.empty() ? "products, sums and inverses keep their class" : "failed:" + failures};
        return out;
    }));

    checks.push_back(run_check("class_inclusion", [&] {
        int mismatches = 0;
        std::string detail;
        for (const WitnessEntry& e : witness_catalog()) {
            const ClassificationReport r = classify(e.function, grid, cfg, tol);
            const auto agrees = [](const std::optional<bool>& expected, const ClassStats& s) {
                return !expected || *expected == s.passed();
            };
            const bool ok = r.inclusion_consistent && agrees(e.expected.class_I, r.class_I) &&
                            agrees(e.expected.class_II, r.class_II) && agrees(e.expected.class_III, r.class_III) &&
                            agrees(e.expected.regular, r.regular);
            if (!ok) {
                ++mismatches;
                detail += " " + e.name;
            }
        }
        return CheckResult{"", mismatches == 0, static_cast<double>(mismatches), 0.0,
                           mismatches == 0 ? "catalog verdicts and inclusion chain hold" : "mismatch:" + detail};
    }));

    checks.push_back(run_check("jacobian_formula", [&] {
        std::mt19937_64 rng(options.seed + 2);
        const QFunction square = power_function(2);
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const Quaternion p = random_grid_point(rng).to_quaternion();
            const JacobianResult j = jacobian_check(square, p, cfg, tol);
            worst = std::max(worst, std::abs(j.det_numeric - j.det_formula) / (1.0 + std::abs(j.det_formula)));
        }
        const JacobianResult at = jacobian_check(square, Quaternion(1.0, 1.0, 0.0, 0.0), cfg, tol);
        const double exact = std::max(std::abs(at.det_numeric - 32.0), std::abs(at.det_formula - 32.0));
        std::ostringstream os;
        os << "det at 1+i: numeric " << at.det_numeric << ", formula " << at.det_formula;
        return CheckResult{"", worst < 1e-4 && exact < 1e-6, worst, 1e-4, os.str()};
    }));

    checks.push_back(run_check("spherical_cauchy_riemann", [&] {
        double worst = 0.0;
        for (const WitnessEntry& e : witness_catalog()) {
            if (!classify(e.function, grid, cfg, tol).class_II.passed()) continue;
            worst = std::max(worst, grid_max(grid, [&](const SphericalPoint& s) {
                                 const CRResiduals cr = spherical_cr_residuals(e.function, s, cfg);
                                 return std::max(std::abs(cr.s1), std::abs(cr.s2));
                             }));
        }
        const double witness = grid_max(grid, [&](const SphericalPoint& s) {
            const CRResiduals cr = spherical_cr_residuals(x_over_r_iota_function(), s, cfg);
            return std::max(std::abs(cr.s1), std::abs(cr.s2));
        });
        std::ostringstream os;
        os << "x-over-r-iota max residual " << witness;
        return CheckResult{"", worst < 1e-5 && witness > 1e-2, worst, 1e-5, os.str()};
    }));

    checks.push_back(run_check("rinehart_regular_extension", [&] {
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
        for (int it = 0; it < grid.per_axis(); ++it) {
            for (int ir = 0; ir < grid.per_axis(); ++ir) {
                const Complex z(SampleGrid::node(grid.t(), grid.per_axis(), it),
                                SampleGrid::node(grid.r(), grid.per_axis(), ir));
                closed = std::max(closed, std::abs(l2(z) - Complex(-2.0, 0.0)));
                closed = std::max(closed, std::abs(l3(z) - Complex(-6.0 * z.real(), -2.0 * z.imag())));
            }
        }
        std::ostringstream os;
        os << "closed-form deviation " << closed;
        return CheckResult{"", worst < 1e-5 && closed < 1e-10, worst, 1e-5, os.str()};
    }));

    checks.push_back(run_check("imaginary_derivative", [&] {
        double worst = 0.0;
        for (const WitnessEntry& e : class2_entries()) {
            worst = std::max(worst, grid_max(grid, [&](const SphericalPoint& s) {
                                 const double v = decompose(e.function, s).v;
                                 return (imaginary_derivative(e.function, s, cfg).value - Quaternion(2.0 * v)).norm();
                             }));
        }
        return bound_check(worst, 1e-5, "class II catalog entries");
    }));

    checks.push_back(run_check("fueter_decomposition", [&] {
        double worst_ratio = 0.0;
        for (const WitnessEntry& e : witness_catalog()) {
            worst_ratio = std::max(worst_ratio, grid_max(grid, [&](const SphericalPoint& s) {
                                       const OperatorValue left = fueter_left(e.function, s.to_quaternion(), cfg);
                                       const OperatorValue c1 = class1_residual(e.function, s, cfg);
                                       const OperatorValue im = imaginary_derivative(e.function, s, cfg);
                                       const Quaternion diff = left.value - (c1.value - im.value / s.r);
                                       const double bound = tol.at(std::max({left.scale, c1.scale, im.scale})) +
                                                            left.estimated_error + c1.estimated_error +
                                                            im.estimated_error / s.r;
                                       return diff.norm() / bound;
                                   }));
        }
        return bound_check(worst_ratio, 1.0, "residual / tolerance over all catalog entries");
    }));

    checks.push_back(run_check("conjugate_right_class2", [&] {
        double worst = 0.0;
        bool ok = true;
        for (const QFunction& f : {rho_function(), varrho_function(), sigma_function()}) {
            const ClassStats stats = right_class2_check(conjugate(f), grid, cfg, tol);
            worst = std::max(worst, stats.max);
            ok = ok && stats.passed();
        }
        return CheckResult{"", ok, worst, tol.abs, "conjugates of angular class II witnesses"};
    }));

    checks.push_back(run_check("centrality", [&] {
        int mismatches = 0;
        std::string detail;
        for (const WitnessEntry& e : witness_catalog()) {
            const bool central = centrality_check(e.function, grid, cfg, tol).passed();
            const bool class3 = classify(e.function, grid, cfg, tol).class_III.passed();
            if (central != class3) {
                ++mismatches;
                detail += " " + e.name;
            }
        }
        return CheckResult{"", mismatches == 0, static_cast<double>(mismatches), 0.0,
                           mismatches == 0 ? "left/right agreement matches class III" : "mismatch:" + detail};
    }));

    checks.push_back(run_check("laurent_coefficient_class", [&] {
        AnnulusRegion region;  // c = i, radii (0.2, 0.6)
        const LaurentSeries square = laurent_coefficients(power_function(2), region, -8, 8, 64);
        double coeff_err = 0.0;
        for (int ia = 0; ia < region.window_points; ++ia) {
            for (int ib = 0; ib < region.window_points; ++ib) {
                for (int n = -8; n <= 8; ++n) {
                    const Complex expected = n == 0 ? Complex(-1, 0) : n == 1 ? Complex(0, 2) : n == 2 ? Complex(1, 0) : 0.0;
                    coeff_err = std::max(coeff_err, std::abs(square.coefficient(n, ia, ib) - expected));
                }
            }
        }
        const LaurentSeries inverse = laurent_coefficients(power_function(-1), region, -20, 20, 128);
        double tail_excess = 0.0;
        for (const double rho : {0.25, 0.4, 0.55}) {
            for (int k = 0; k < 8; ++k) {
                const Complex z = region.center() + std::polar(rho, 2.0 * std::numbers::pi * (k + 0.5) / 8.0);
                const Quaternion p = SphericalPoint{z.real(), z.imag(), 0.3, 1.1}.to_quaternion();
                const double ratio = rho / region.c2;
                const double bound = std::pow(ratio, 21) / (1.0 - ratio) + roundoff_floor(rho, region, 20, 1.0 / (region.c2 - rho));
                tail_excess = std::max(tail_excess, distance(reconstruct(inverse, p), inv(p)) / bound);
            }
        }
        double cr_worst = 0.0;
        for (const QFunction& f : {rho_function(), product(rho_function(), identity_function()), power_function(2)}) {
            const LaurentSeries series = laurent_coefficients(f, region, -4, 4, 64);
            for (const CoefficientVerdict& v : coefficient_class_check(series, cfg, tol))
                cr_worst = std::max(cr_worst, v.max_residual);
        }
        std::ostringstream os;
        os << "p^2 coefficient error " << coeff_err << ", inverse tail ratio " << tail_excess;
        return CheckResult{"", coeff_err < 1e-9 && tail_excess <= 1.0 && cr_worst < 1e-5, cr_worst, 1e-5, os.str()};
    }));

    checks.push_back(run_check("mirror", [&] {
        const QFunction rho = rho_function();
        const ClassStats right = right_class2_check(mirror(rho), grid, cfg, tol);
        const QFunction twice = mirror(mirror(rho));
        const double involution = grid_max(grid, [&](const SphericalPoint& s) { return distance(twice(s), rho(s)); });
        // Mirror-series consistency: coefficients of M(f) about conj(c) are the conjugated coefficients of f.
        const QFunction f = product(rho, power_function(2));
        const QFunction mf = mirror(f);
        const Complex c(0.0, 1.0);
        double series_err = 0.0;
        for (const double alpha : {-1.0, 0.4, 2.0}) {
            for (const double beta : {0.7, 1.3, 2.2}) {
                const auto a = slice_line_coefficients(f, alpha, beta, c, 0.4, -4, 4, 64);
                const auto b = slice_line_coefficients(mf, alpha, beta, std::conj(c), 0.4, -4, 4, 64);
                for (std::size_t n = 0; n < a.size(); ++n) series_err = std::max(series_err, std::abs(b[n] - std::conj(a[n])));
            }
        }
        std::ostringstream os;
        os << "involution " << involution << ", mirrored series " << series_err;
        return CheckResult{"", right.passed() && right.max < 1e-5 && involution < 1e-12 && series_err < 1e-8,
                           right.max, 1e-5, os.str()};
    }));

    checks.push_back(run_check("chirality", [&] {
        // fueter_left(f) = -fueter_right(conj f) for t-independent angular witnesses.
        double worst_ratio = 0.0;
        for (const QFunction& f : {rho_function(), varrho_function(), sigma_function()}) {
            const QFunction fbar = conjugate(f);
            worst_ratio = std::max(worst_ratio, grid_max(grid, [&](const SphericalPoint& s) {
                                       const Quaternion p = s.to_quaternion();
                                       const OperatorValue l = fueter_left(f, p, cfg);
                                       const OperatorValue r = fueter_right(fbar, p, cfg);
                                       return (l.value + r.value).norm() / tol.at(std::max(l.scale, r.scale));
                                   }));
        }
        return bound_check(worst_ratio, 1.0, "residual / tolerance for rho, varrho, sigma");
    }));

    checks.push_back(run_check("chiral_difference", [&] {
        const DiffConfig outer = config(1e-4, Scheme::Richardson);
        const DiffConfig inner = options.h ? DiffConfig{*options.h, Scheme::Richardson} : kChiralInnerConfig;
        const QFunction delta = chiral_difference(rho_function(), inner, grid);
        const double worst = grid_max(grid, [&](const SphericalPoint& s) {
            return fueter_left(delta, s.to_quaternion(), outer).value.norm();
        });
        const QFunction cube_delta = chiral_difference(power_function(3), inner, grid);
        const double cube = grid_max(grid, [&](const SphericalPoint& s) { return cube_delta(s).norm(); });
        std::ostringstream os;
        os << "chiral difference of p^3: " << cube;
        return CheckResult{"", worst < 1e-4 && cube < 1e-8, worst, 1e-4, os.str()};
    }));

    checks.push_back(run_check("convergence_order", [&] {
        // Roundoff swamps truncation error below h ~ 1e-3, so the ladder starts there at the latest.
        const double h = std::max(options.h.value_or(1e-2), 1e-3);
        const QFunction cube = power_function(3);
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (const Quaternion p : {Quaternion(0.3, 0.5, -0.2, 0.7), Quaternion(-0.8, 0.1, 0.9, 0.4),
                                   Quaternion(0.5, -0.6, 0.3, -0.2)}) {
            const double r = p.imag_norm();
            const double exact = -2.0 * (3.0 * p.t * p.t - r * r);  // -2 v / r with v = 3 t^2 r - r^3
            const double e1 = (fueter_left(cube, p, {h, Scheme::Central}).value - Quaternion(exact)).norm();
            const double e2 = (fueter_left(cube, p, {h / 2.0, Scheme::Central}).value - Quaternion(exact)).norm();
            lo = std::min(lo, e1 / e2);
            hi = std::max(hi, e1 / e2);
        }
        std::ostringstream os;
        os << "error ratio under h -> h/2 in [" << lo << ", " << hi << "] at h = " << h;
        return CheckResult{"", lo >= 3.3 && hi <= 4.7, hi, 4.7, os.str()};
    }));

    return summary;
}

}  // namespace fueterlab
