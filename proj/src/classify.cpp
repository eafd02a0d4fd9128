#include "fueterlab/classify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "fueterlab/errors.hpp"
#include "fueterlab/parallel.hpp"

namespace fueterlab {

const char* to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Singular: return "singular";
        case Verdict::NotCE: return "not-CE";
    }
    return "fail";
}

void StatsAccumulator::add(double residual, double tolerance) {
    max_ = std::max(max_, residual);
    sum_ += residual;
    const double ratio = residual / tolerance;
    max_ratio_ = std::max(max_ratio_, ratio);
    if (residual <= tolerance) ++within_;
    ++count_;
}

ClassStats StatsAccumulator::finish() const {
    ClassStats s;
    s.max = max_;
    s.points = count_;
    s.singular = singular_;
    s.mean = count_ ? sum_ / static_cast<double>(count_) : 0.0;
    s.max_ratio = max_ratio_;
    s.pass_fraction = count_ ? static_cast<double>(within_) / static_cast<double>(count_) : 0.0;
    if (singular_ > 0 || count_ == 0)
        s.verdict = Verdict::Singular;
    else if (s.pass_fraction >= kPassFraction && max_ratio_ < kMaxToleranceMultiple)
        s.verdict = Verdict::Pass;
    else
        s.verdict = Verdict::Fail;
    return s;
}

namespace {

struct Sample {
    double residual = 0.0;
    double tolerance = 1.0;
};

struct PointEval {
    bool singular = false;
    Sample ce, class_I, class_II, ci, class_III, regular, centrality;
};

// Largest angular partial of u and v at fixed (t, r).
Sample angular_uv_derivatives(const QFunction& f, const SphericalPoint& s, const DiffConfig& cfg,
                              const Tolerance& tol) {
    const auto packed = [&](double a, double b) {
        const CEParts parts = decompose(f, SphericalPoint{s.t, s.r, a, b});
        return Quaternion(parts.u, parts.v, 0.0, 0.0);
    };
    const Derivative da = differentiate([&](double e) { return packed(s.alpha + e, s.beta); }, cfg);
    const Derivative db = differentiate([&](double e) { return packed(s.alpha, s.beta + e); }, cfg);
    const double residual = std::max({std::abs(da.value.t), std::abs(da.value.x), std::abs(db.value.t),
                                      std::abs(db.value.x)});
    return {residual, tol.at(std::max(da.scale, db.scale))};
}

PointEval evaluate_point(const QFunction& f, const SphericalPoint& s, const DiffConfig& cfg,
                         const Tolerance& tol) {
    PointEval e;
    try {
        const Quaternion p = s.to_quaternion();
        const Quaternion fp = f(p);
        e.ce = {(fp * p - p * fp).norm(), kCommutationTolerance * (1.0 + p.norm() * fp.norm())};

        const OperatorValue c1 = class1_residual(f, s, cfg);
        e.class_I = {c1.value.norm(), tol.at(c1.scale)};

        const CartesianGradient g = cartesian_gradient(f, p, cfg);
        const Quaternion left = g.left();
        const Quaternion right = g.right();
        const double v = decompose(fp, s).v;
        e.class_II = {(left + Quaternion(2.0 * v / s.r)).norm(), tol.at(g.scale)};
        e.regular = {left.norm(), tol.at(g.scale)};
        e.centrality = {(left - right).norm(), tol.at(g.scale)};

        e.ci = angular_uv_derivatives(f, s, cfg, tol);
        e.class_III = {std::max(e.class_I.residual, e.ci.residual), std::min(e.class_I.tolerance, e.ci.tolerance)};
    } catch (const DomainError&) {
        e.singular = true;
    }
    return e;
}

template <typename Fn>
std::vector<PointEval> evaluate_grid(const SampleGrid& grid, Fn&& fn) {
    std::vector<PointEval> out(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) { out[i] = fn(grid.point(i)); });
    return out;
}

ClassStats reduce(const std::vector<PointEval>& evals, Sample PointEval::*field) {
    StatsAccumulator acc;
    for (const PointEval& e : evals) {
        if (e.singular)
            acc.add_singular();
        else
            acc.add((e.*field).residual, (e.*field).tolerance);
    }
    return acc.finish();
}

ClassStats gate_on_ce(ClassStats stats, const ClassStats& ce) {
    if (ce.verdict == Verdict::Fail) stats.verdict = Verdict::NotCE;
    if (ce.verdict == Verdict::Singular) stats.verdict = Verdict::Singular;
    return stats;
}

}  // namespace

ClassificationReport classify(const QFunction& f, const SampleGrid& grid, const DiffConfig& cfg,
                              const Tolerance& tol) {
    cfg.validate();
    const std::vector<PointEval> evals =
        evaluate_grid(grid, [&](const SphericalPoint& s) { return evaluate_point(f, s, cfg, tol); });

    ClassificationReport report;
    report.function = f.name();
    report.grid = grid;
    report.config = cfg;
    report.tolerance = tol;
    report.ce = reduce(evals, &PointEval::ce);
    report.ci = gate_on_ce(reduce(evals, &PointEval::ci), report.ce);
    report.class_I = gate_on_ce(reduce(evals, &PointEval::class_I), report.ce);
    report.class_II = gate_on_ce(reduce(evals, &PointEval::class_II), report.ce);
    report.class_III = gate_on_ce(reduce(evals, &PointEval::class_III), report.ce);
    report.regular = reduce(evals, &PointEval::regular);
    report.centrality = reduce(evals, &PointEval::centrality);

    const bool p1 = report.class_I.passed();
    const bool p2 = report.class_II.passed();
    const bool p3 = report.class_III.passed();
    report.inclusion_consistent = (!p3 || p2) && (!p2 || p1);
    return report;
}

ClassStats centrality_check(const QFunction& f, const SampleGrid& grid, const DiffConfig& cfg,
                            const Tolerance& tol) {
    cfg.validate();
    const auto evals = evaluate_grid(grid, [&](const SphericalPoint& s) {
        PointEval e;
        try {
            const CartesianGradient g = cartesian_gradient(f, s.to_quaternion(), cfg);
            e.centrality = {(g.left() - g.right()).norm(), tol.at(g.scale)};
        } catch (const DomainError&) {
            e.singular = true;
        }
        return e;
    });
    return reduce(evals, &PointEval::centrality);
}

ClassStats right_class2_check(const QFunction& f, const SampleGrid& grid, const DiffConfig& cfg,
                              const Tolerance& tol) {
    cfg.validate();
    const auto evals = evaluate_grid(grid, [&](const SphericalPoint& s) {
        PointEval e;
        try {
            const Quaternion p = s.to_quaternion();
            const CartesianGradient g = cartesian_gradient(f, p, cfg);
            const double v = decompose(f(p), s).v;
            e.class_II = {(g.right() + Quaternion(2.0 * v / s.r)).norm(), tol.at(g.scale)};
        } catch (const DomainError&) {
            e.singular = true;
        }
        return e;
    });
    return reduce(evals, &PointEval::class_II);
}

ClassStats regular_check(const QFunction& f, const SampleGrid& grid, const DiffConfig& cfg,
                         const Tolerance& tol) {
    cfg.validate();
    const auto evals = evaluate_grid(grid, [&](const SphericalPoint& s) {
        PointEval e;
        try {
            const OperatorValue d = fueter_left(f, s.to_quaternion(), cfg);
            e.regular = {d.value.norm(), tol.at(d.scale)};
        } catch (const DomainError&) {
            e.singular = true;
        }
        return e;
    });
    return reduce(evals, &PointEval::regular);
}

JacobianResult jacobian_check(const QFunction& f, const Quaternion& p, const DiffConfig& cfg,
                              const Tolerance& tol) {
    cfg.validate();
    const SphericalPoint s = to_spherical(p);
    const CartesianGradient g = cartesian_gradient(f, p, cfg);

    Eigen::Matrix4d jac;
    const std::array<Quaternion, 4> columns{g.dt, g.dx, g.dy, g.dz};
    for (int c = 0; c < 4; ++c) {
        const auto comp = columns[static_cast<std::size_t>(c)].components();
        for (int r = 0; r < 4; ++r) jac(r, c) = comp[static_cast<std::size_t>(r)];
    }

    const Quaternion fp = f(p);
    const Quaternion iot = iota(s);
    const double v = imag_dot(fp, iot);
    // t-derivatives at fixed (r, alpha, beta): iota does not move along t.
    const double du_dt = g.dt.t;
    const double dv_dt = imag_dot(g.dt, iot);

    JacobianResult out;
    out.det_numeric = jac.determinant();
    out.det_formula = (du_dt * du_dt + dv_dt * dv_dt) * v * v / (s.r * s.r);

    const double commutator = (fp * p - p * fp).norm();
    const bool ce_here = commutator < kCommutationTolerance * (1.0 + p.norm() * fp.norm());
    const double class2_residual = (g.left() + Quaternion(2.0 * v / s.r)).norm();
    out.advisory = !ce_here || class2_residual > tol.at(g.scale);
    return out;
}

}  // namespace fueterlab
