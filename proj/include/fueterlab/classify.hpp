#pragma once

#include <cstddef>
#include <string>

#include "fueterlab/diffops.hpp"
#include "fueterlab/function.hpp"

namespace fueterlab {

enum class Verdict { Pass, Fail, Singular, NotCE };

const char* to_string(Verdict verdict);

/// Residual statistics for one membership test over a grid.
struct ClassStats {
    double max = 0.0;
    double mean = 0.0;
    double max_ratio = 0.0;       // max residual / per-point tolerance
    double pass_fraction = 0.0;   // fraction of points at or below tolerance
    std::size_t points = 0;
    std::size_t singular = 0;
    Verdict verdict = Verdict::Fail;

    bool passed() const { return verdict == Verdict::Pass; }
};

/// Pass rule: at least 99.9% of points within tolerance and the worst point within 100x.
inline constexpr double kPassFraction = 0.999;
inline constexpr double kMaxToleranceMultiple = 100.0;

/// Relative tolerance of the commutation test |f p - p f| < 1e-9 (1 + |p| |f|).
inline constexpr double kCommutationTolerance = 1e-9;

struct ClassificationReport {
    std::string function;
    SampleGrid grid = SampleGrid::default_grid();
    DiffConfig config;
    Tolerance tolerance;

    ClassStats ce;
    ClassStats ci;
    ClassStats class_I;
    ClassStats class_II;
    ClassStats class_III;
    ClassStats regular;
    ClassStats centrality;  // pass = left and right Fueter images agree

    bool inclusion_consistent = true;  // pass(III) => pass(II) => pass(I)
};

ClassificationReport classify(const QFunction& f, const SampleGrid& grid = SampleGrid::default_grid(),
                              const DiffConfig& cfg = {}, const Tolerance& tol = {});

/// Left/right Fueter agreement over the grid.
ClassStats centrality_check(const QFunction& f, const SampleGrid& grid = SampleGrid::default_grid(),
                            const DiffConfig& cfg = {}, const Tolerance& tol = {});

/// Right-handed class II test: |fueter_right(f) + 2v/r| over the grid.
ClassStats right_class2_check(const QFunction& f, const SampleGrid& grid = SampleGrid::default_grid(),
                              const DiffConfig& cfg = {}, const Tolerance& tol = {});

/// Regularity test alone: |fueter_left(f)| over the grid.
ClassStats regular_check(const QFunction& f, const SampleGrid& grid = SampleGrid::default_grid(),
                         const DiffConfig& cfg = {}, const Tolerance& tol = {});

struct JacobianResult {
    double det_numeric = 0.0;  // determinant of the 4x4 finite-difference Jacobian
    double det_formula = 0.0;  // |df/dt|^2 v^2 / r^2
    bool advisory = false;     // f is not class II at p, so the formula is unproven there
};

/// Throws ChartSingularity off the chart (r = 0).
JacobianResult jacobian_check(const QFunction& f, const Quaternion& p, const DiffConfig& cfg = {},
                              const Tolerance& tol = {});

/// Aggregates per-point (residual, tolerance) pairs with the pass rule above.
class StatsAccumulator {
public:
    void add(double residual, double tolerance);
    void add_singular() { ++singular_; }
    ClassStats finish() const;

private:
    double max_ = 0.0;
    double sum_ = 0.0;
    double max_ratio_ = 0.0;
    std::size_t count_ = 0;
    std::size_t within_ = 0;
    std::size_t singular_ = 0;
};

}  // namespace fueterlab
