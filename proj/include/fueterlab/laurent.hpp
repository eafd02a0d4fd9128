#pragma once

#include <optional>
#include <vector>

#include "fueterlab/classify.hpp"
#include "fueterlab/diffops.hpp"
#include "fueterlab/function.hpp"

namespace fueterlab {

/// Product set {s < |t + ir - c| < S} x window on the sphere, with c = c1 + c2 i.
struct AnnulusRegion {
    double c1 = 0.0;
    double c2 = 1.0;
    double inner = 0.2;  // s
    double outer = 0.6;  // S
    SampleGrid::Range alpha{-2.5, 2.5};
    SampleGrid::Range beta{0.4, std::numbers::pi - 0.4};
    int window_points = 9;

    Complex center() const { return {c1, c2}; }
    double contour_radius() const { return 0.5 * (inner + outer); }
    double alpha_node(int k) const { return SampleGrid::node(alpha, window_points, k); }
    double beta_node(int k) const { return SampleGrid::node(beta, window_points, k); }

    /// Throws std::invalid_argument unless 0 < s < S, c2 - S > 0 and the window keeps sin(beta) >= 0.1.
    void validate() const;
};

inline constexpr int kMinQuadraturePoints = 16;

/// Coefficients a_n(alpha, beta), sampled on the window grid, of the per-slice Laurent expansion.
class LaurentSeries {
public:
    LaurentSeries(AnnulusRegion region, int n_min, int n_max, int quadrature_points,
                  std::vector<std::vector<Complex>> coefficients, std::optional<QFunction> source = {});

    const AnnulusRegion& region() const { return region_; }
    int n_min() const { return n_min_; }
    int n_max() const { return n_max_; }
    int quadrature_points() const { return quadrature_points_; }
    const std::optional<QFunction>& source() const { return source_; }

    /// a_n at window node (ia, ib) as a slice complex number.
    Complex coefficient(int n, int ia, int ib) const;
    /// Bilinear interpolation of a_n over the window grid.
    Complex interpolate(int n, double alpha, double beta) const;
    /// a_n(alpha, beta) lifted to the CE quaternion Re + iota Im.
    Quaternion coefficient_quaternion(int n, double alpha, double beta) const;

    /// Truncation estimate at distance |z - c| = rho from the centre: geometric tails extrapolated
    /// from |a_{n_max}| with ratio rho / S and from |a_{n_min}| with ratio s / rho.
    double tail_estimate(double rho) const;

private:
    AnnulusRegion region_;
    int n_min_;
    int n_max_;
    int quadrature_points_;
    std::vector<std::vector<Complex>> coefficients_;  // [n - n_min][ia * window + ib]
    std::optional<QFunction> source_;
};

/// Trapezoid-rule coefficients (1/N) sum f(w_k) (w_k - c)^{-n} on the circle |w - c| = radius in the
/// complex line {t + s iota(alpha, beta)}, s of either sign. Values are read with the fixed unit iota:
/// f = u + iota v maps to u + iv. Returns n_min..n_max in order.
std::vector<Complex> slice_line_coefficients(const QFunction& f, double alpha, double beta, Complex center,
                                             double radius, int n_min, int n_max, int quadrature_points);

/// Throws KindError for raw f, std::invalid_argument for a bad region or fewer than 16 points.
LaurentSeries laurent_coefficients(const QFunction& f, const AnnulusRegion& region, int n_min = -8,
                                   int n_max = 8, int quadrature_points = 64);

/// Partial sum at p. DomainError when p leaves the annulus or the window.
Quaternion reconstruct(const LaurentSeries& series, const Quaternion& p);

/// Max |reconstruct - f| over window nodes x {3 radii} x {8 angles} inside the annulus.
double probe_reconstruction_error(const LaurentSeries& series, const QFunction& f);

struct CoefficientVerdict {
    int n;
    double max_residual;  // max over window nodes of max(|S1|, |S2|)
    Verdict verdict;
};

/// Spherical Cauchy-Riemann test of every a_n, with angular derivatives taken by re-running the
/// contour quadrature on displaced slices. Needs the series' source function.
std::vector<CoefficientVerdict> coefficient_class_check(const LaurentSeries& series, const DiffConfig& cfg = {},
                                                        const Tolerance& tol = {});

}  // namespace fueterlab
