#include "fueterlab/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fueterlab/errors.hpp"
#include "fueterlab/parallel.hpp"

namespace fueterlab {

void AnnulusRegion::validate() const {
    if (!(inner > 0.0 && inner < outer)) throw std::invalid_argument("annulus radii must satisfy 0 < s < S");
    if (!(c2 - outer > 0.0)) throw std::invalid_argument("annulus must stay in the upper half slice (c2 - S > 0)");
    if (window_points < 2) throw std::invalid_argument("window needs at least 2 points per axis");
    if (!(alpha.lo <= alpha.hi) || alpha.lo < -std::numbers::pi || alpha.hi > std::numbers::pi)
        throw std::invalid_argument("alpha window must lie in [-pi, pi]");
    if (!(beta.lo <= beta.hi) || beta.lo < 0.0 || beta.hi > std::numbers::pi ||
        std::min(std::sin(beta.lo), std::sin(beta.hi)) < kSinBetaMargin)
        throw std::invalid_argument("beta window must keep sin(beta) >= 0.1");
}

// ------------------------------------------------------------ LaurentSeries

LaurentSeries::LaurentSeries(AnnulusRegion region, int n_min, int n_max, int quadrature_points,
                             std::vector<std::vector<Complex>> coefficients, std::optional<QFunction> source)
    : region_(region),
      n_min_(n_min),
      n_max_(n_max),
      quadrature_points_(quadrature_points),
      coefficients_(std::move(coefficients)),
      source_(std::move(source)) {
    const auto w = static_cast<std::size_t>(region_.window_points);
    if (n_max_ < n_min_ || coefficients_.size() != static_cast<std::size_t>(n_max_ - n_min_ + 1))
        throw std::invalid_argument("coefficient table does not match the n range");
    for (const auto& table : coefficients_) {
        if (table.size() != w * w) throw std::invalid_argument("coefficient table does not match the window");
    }
}

Complex LaurentSeries::coefficient(int n, int ia, int ib) const {
    if (n < n_min_ || n > n_max_) return 0.0;
    const auto idx = static_cast<std::size_t>(ia * region_.window_points + ib);
    return coefficients_[static_cast<std::size_t>(n - n_min_)].at(idx);
}

Complex LaurentSeries::interpolate(int n, double alpha, double beta) const {
    const int w = region_.window_points;
    const auto locate = [w](const SampleGrid::Range& range, double x, int& cell, double& frac) {
        const double span = range.hi - range.lo;
        const double pos = span > 0.0 ? (x - range.lo) / span * (w - 1) : 0.0;
        cell = std::clamp(static_cast<int>(std::floor(pos)), 0, w - 2);
        frac = std::clamp(pos - cell, 0.0, 1.0);
    };
    int ia = 0, ib = 0;
    double fa = 0.0, fb = 0.0;
    locate(region_.alpha, alpha, ia, fa);
    locate(region_.beta, beta, ib, fb);
    return (1 - fa) * (1 - fb) * coefficient(n, ia, ib) + fa * (1 - fb) * coefficient(n, ia + 1, ib) +
           (1 - fa) * fb * coefficient(n, ia, ib + 1) + fa * fb * coefficient(n, ia + 1, ib + 1);
}

Quaternion LaurentSeries::coefficient_quaternion(int n, double alpha, double beta) const {
    const Complex a = interpolate(n, alpha, beta);
    return Quaternion(a.real()) + iota(alpha, beta) * a.imag();
}

double LaurentSeries::tail_estimate(double rho) const {
    double top = 0.0, bottom = 0.0;
    for (const Complex& a : coefficients_.back()) top = std::max(top, std::abs(a));
    for (const Complex& a : coefficients_.front()) bottom = std::max(bottom, std::abs(a));
    const double q_out = rho / region_.outer;
    const double q_in = region_.inner / rho;
    double tail = 0.0;
    if (q_out < 1.0) tail += top * std::pow(rho, n_max_) * q_out / (1.0 - q_out);
    if (q_in < 1.0) tail += bottom * std::pow(rho, n_min_) * q_in / (1.0 - q_in);
    return tail;
}

// ----------------------------------------------------------------- extraction

std::vector<Complex> slice_line_coefficients(const QFunction& f, double alpha, double beta, Complex center,
                                             double radius, int n_min, int n_max, int quadrature_points) {
    if (quadrature_points < kMinQuadraturePoints)
        throw std::invalid_argument("quadrature needs at least 16 points");
    const Quaternion unit = iota(alpha, beta);
    std::vector<Complex> acc(static_cast<std::size_t>(n_max - n_min + 1), 0.0);
    for (int k = 0; k < quadrature_points; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / quadrature_points;
        const Complex w = center + std::polar(radius, theta);
        const Quaternion value = f(Quaternion(w.real()) + unit * w.imag());
        const Complex fw(value.t, imag_dot(value, unit));
        for (int n = n_min; n <= n_max; ++n)
            acc[static_cast<std::size_t>(n - n_min)] += fw * std::polar(std::pow(radius, -n), -n * theta);
    }
    for (Complex& a : acc) a /= static_cast<double>(quadrature_points);
    return acc;
}

LaurentSeries laurent_coefficients(const QFunction& f, const AnnulusRegion& region, int n_min, int n_max,
                                   int quadrature_points) {
    if (!f.is_ce()) throw KindError("Laurent coefficients need a CE function, got raw '" + f.name() + "'");
    region.validate();
    if (n_max < n_min) throw std::invalid_argument("n range must satisfy n_min <= n_max");
    if (quadrature_points < kMinQuadraturePoints)
        throw std::invalid_argument("quadrature needs at least 16 points");

    const int w = region.window_points;
    const auto nodes = static_cast<std::size_t>(w * w);
    std::vector<std::vector<Complex>> table(static_cast<std::size_t>(n_max - n_min + 1),
                                            std::vector<Complex>(nodes));
    parallel_for(nodes, [&](std::size_t idx) {
        const int ia = static_cast<int>(idx) / w;
        const int ib = static_cast<int>(idx) % w;
        const auto a = slice_line_coefficients(f, region.alpha_node(ia), region.beta_node(ib), region.center(),
                                               region.contour_radius(), n_min, n_max, quadrature_points);
        for (std::size_t n = 0; n < a.size(); ++n) table[n][idx] = a[n];
    });
    return LaurentSeries(region, n_min, n_max, quadrature_points, std::move(table), f);
}

Quaternion reconstruct(const LaurentSeries& series, const Quaternion& p) {
    const AnnulusRegion& region = series.region();
    const SphericalPoint s = to_spherical(p);
    constexpr double slack = 1e-12;
    if (s.alpha < region.alpha.lo - slack || s.alpha > region.alpha.hi + slack || s.beta < region.beta.lo - slack ||
        s.beta > region.beta.hi + slack)
        throw DomainError("reconstruct: point outside the angular window");
    const Complex offset = Complex(s.t, s.r) - region.center();
    const double rho = std::abs(offset);
    if (!(rho > region.inner && rho < region.outer)) throw DomainError("reconstruct: point outside the annulus");

    Complex total = 0.0;
    Complex power = std::pow(offset, series.n_min());
    for (int n = series.n_min(); n <= series.n_max(); ++n) {
        total += series.interpolate(n, s.alpha, s.beta) * power;
        power *= offset;
    }
    return Quaternion(total.real()) + iota(s) * total.imag();
}

double probe_reconstruction_error(const LaurentSeries& series, const QFunction& f) {
    const AnnulusRegion& region = series.region();
    double worst = 0.0;
    for (int ia = 0; ia < region.window_points; ++ia) {
        for (int ib = 0; ib < region.window_points; ++ib) {
            for (const double frac : {0.25, 0.5, 0.75}) {
                const double rho = region.inner + frac * (region.outer - region.inner);
                for (int k = 0; k < 8; ++k) {
                    const Complex z = region.center() + std::polar(rho, 2.0 * std::numbers::pi * (k + 0.5) / 8.0);
                    const Quaternion p = SphericalPoint{z.real(), z.imag(), region.alpha_node(ia),
                                                        region.beta_node(ib)}.to_quaternion();
                    worst = std::max(worst, distance(reconstruct(series, p), f(p)));
                }
            }
        }
    }
    return worst;
}

// -------------------------------------------------------- coefficient class

std::vector<CoefficientVerdict> coefficient_class_check(const LaurentSeries& series, const DiffConfig& cfg,
                                                        const Tolerance& tol) {
    cfg.validate();
    if (!series.source())
        throw PreconditionError("coefficient class check needs the series' source function");
    const AnnulusRegion& region = series.region();
    if (region.window_points < 3)
        throw std::invalid_argument("window resolution too coarse for angular stencils");

    const QFunction& f = *series.source();
    const int w = region.window_points;
    const auto count = static_cast<std::size_t>(series.n_max() - series.n_min() + 1);
    const auto coeffs = [&](double a, double b) {
        return slice_line_coefficients(f, a, b, region.center(), region.contour_radius(), series.n_min(),
                                       series.n_max(), series.quadrature_points());
    };
    // Central or Richardson derivative of every a_n along one angle.
    const auto derivative = [&](auto&& at) {
        const auto central = [&](double h) {
            const auto plus = at(h);
            const auto minus = at(-h);
            std::vector<Complex> d(count);
            double scale = 0.0;
            for (std::size_t n = 0; n < count; ++n) {
                d[n] = (plus[n] - minus[n]) / (2.0 * h);
                scale = std::max({scale, std::abs(plus[n]), std::abs(minus[n])});
            }
            return std::pair{d, scale};
        };
        auto [d, scale] = central(cfg.h);
        if (cfg.scheme == Scheme::Richardson) {
            auto [fine, fine_scale] = central(cfg.h / 2.0);
            for (std::size_t n = 0; n < count; ++n) d[n] = fine[n] + (fine[n] - d[n]) / 3.0;
            scale = std::max(scale, fine_scale);
        }
        return std::pair{d, scale};
    };

    std::vector<std::vector<double>> tolerances(static_cast<std::size_t>(w * w), std::vector<double>(count));
    std::vector<std::vector<double>> residuals(static_cast<std::size_t>(w * w), std::vector<double>(count));
    parallel_for(static_cast<std::size_t>(w * w), [&](std::size_t idx) {
        const double alpha = region.alpha_node(static_cast<int>(idx) / w);
        const double beta = region.beta_node(static_cast<int>(idx) % w);
        const double sb = std::sin(beta);
        const auto [da, scale_a] = derivative([&](double e) { return coeffs(alpha + e, beta); });
        const auto [db, scale_b] = derivative([&](double e) { return coeffs(alpha, beta + e); });
        for (std::size_t n = 0; n < count; ++n) {
            // a_n = u_n + i v_n: S1 = dv/da / sin b + du/db, S2 = du/da / sin b - dv/db.
            const double s1 = da[n].imag() / sb + db[n].real();
            const double s2 = da[n].real() / sb - db[n].imag();
            const double residual = std::max(std::abs(s1), std::abs(s2));
            residuals[idx][n] = residual;
            tolerances[idx][n] = tol.at(std::max(scale_a, scale_b));
        }
    });

    std::vector<CoefficientVerdict> out;
    for (std::size_t n = 0; n < count; ++n) {
        StatsAccumulator acc;
        for (std::size_t idx = 0; idx < residuals.size(); ++idx)
            acc.add(residuals[idx][n], tolerances[idx][n]);
        const ClassStats stats = acc.finish();
        out.push_back({series.n_min() + static_cast<int>(n), stats.max, stats.verdict});
    }
    return out;
}

}  // namespace fueterlab
