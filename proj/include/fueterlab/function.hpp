#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fueterlab/quaternion.hpp"

namespace fueterlab {

using Complex = std::complex<double>;

enum class FunctionKind {
    Raw,  // no structural guarantee
    CE,   // commutes with its argument: f = u + iota v
    CI,   // CE with a single complex component (u, v independent of alpha, beta)
};

const char* to_string(FunctionKind kind);

/// Closed box in (t, r, alpha, beta). Unbounded by default.
struct DomainBox {
    double t_min = -std::numeric_limits<double>::infinity();
    double t_max = std::numeric_limits<double>::infinity();
    double r_min = 0.0;
    double r_max = std::numeric_limits<double>::infinity();
    double alpha_min = -std::numbers::pi;
    double alpha_max = std::numbers::pi;
    double beta_min = 0.0;
    double beta_max = std::numbers::pi;

    bool unbounded() const;
    bool contains(const Quaternion& p) const;
    DomainBox intersect(const DomainBox& other) const;
};

/// Regular (t, r, alpha, beta) lattice kept away from the chart poles.
class SampleGrid {
public:
    static constexpr double kMinSinBeta = 0.1;
    static constexpr double kMinRadius = 0.1;

    struct Range {
        double lo;
        double hi;
    };

    /// Throws std::invalid_argument if any node would violate the margins.
    SampleGrid(Range t, Range r, Range alpha, Range beta, int per_axis);

    /// t in [-1, 1], r in [0.5, 1.5], alpha in [-2.5, 2.5], beta in [0.4, pi - 0.4], 8 per axis.
    static SampleGrid default_grid();

    const Range& t() const { return t_; }
    const Range& r() const { return r_; }
    const Range& alpha() const { return alpha_; }
    const Range& beta() const { return beta_; }
    int per_axis() const { return n_; }
    std::size_t size() const;

    // Row-major in (t, r, alpha, beta), beta fastest.
    SphericalPoint point(std::size_t index) const;
    std::vector<SphericalPoint> points() const;

    static double node(const Range& range, int n, int k);

private:
    Range t_, r_, alpha_, beta_;
    int n_;
};

/// Evaluable quaternion-valued function of a quaternion. Immutable and cheap to copy.
class QFunction {
public:
    using Evaluator = std::function<Quaternion(const Quaternion&)>;

    QFunction() = default;
    QFunction(std::string name, FunctionKind kind, Evaluator evaluator, DomainBox domain = {});

    Quaternion operator()(const Quaternion& p) const { return (*evaluator_)(p); }
    Quaternion operator()(const SphericalPoint& s) const { return (*evaluator_)(s.to_quaternion()); }

    const std::string& name() const { return name_; }
    FunctionKind kind() const { return kind_; }
    const DomainBox& domain() const { return domain_; }
    bool is_ce() const { return kind_ != FunctionKind::Raw; }
    bool valid() const { return static_cast<bool>(evaluator_); }

    QFunction renamed(std::string name) const;

private:
    std::string name_;
    FunctionKind kind_ = FunctionKind::Raw;
    std::shared_ptr<const Evaluator> evaluator_;
    DomainBox domain_;
};

/// Real and iota-components of a CE value: f = u + iota v.
struct CEParts {
    double u;
    double v;
};

/// u = Re f, v = Im f . iota(s).
CEParts decompose(const Quaternion& value, const SphericalPoint& s);
CEParts decompose(const QFunction& f, const SphericalPoint& s);

/// Finite Laurent polynomial sum c_n z^n, or a registered closed form, on the upper half plane.
class ComplexStem {
public:
    struct Term {
        int n;
        Complex c;
    };

    enum class Form { Laurent, Exp, Log, Sin, Cos, LogTan };

    static ComplexStem laurent(std::vector<Term> terms);
    static ComplexStem monomial(int n, Complex c = 1.0);
    /// One of "exp", "log", "sin", "cos", "logtan" (log tan(z/2)).
    static ComplexStem named(const std::string& name);

    /// Throws DomainError when Im z <= 0.
    Complex operator()(Complex z) const;
    /// Analytic for Laurent stems, complex central difference for closed forms.
    Complex derivative(Complex z) const;

    Form form() const { return form_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool has_analytic_derivative() const { return form_ == Form::Laurent; }
    std::string name() const;

    /// |df/dx + i df/dy| by central differences with step h.
    double cr_residual(Complex z, double h = 1e-5) const;

private:
    ComplexStem(Form form, std::vector<Term> terms) : form_(form), terms_(std::move(terms)) {}
    Complex eval_unchecked(Complex z) const;

    Form form_ = Form::Laurent;
    std::vector<Term> terms_;
};

/// Complex function of z = x + iy on the upper half plane, not necessarily analytic.
struct ComplexField {
    std::string name;
    std::function<Complex(Complex)> eval;

    Complex operator()(Complex z) const { return eval(z); }
};

/// Slice-substitution lift: f(t + r iota) = u(t, r) + iota v(t, r) with u + iv = stem(t + ir).
QFunction cullen_extend(const ComplexStem& stem);

/// Same lift for an arbitrary complex field on the upper half plane.
QFunction ci_lift(const ComplexField& g, std::string name);

using ScalarField = std::function<double(const SphericalPoint&)>;

/// CE function u(s) + iota(s) v(s). The chart singularities throw.
QFunction from_uv(ScalarField u, ScalarField v, std::string name = "uv",
                  FunctionKind kind = FunctionKind::CE);

/// Complex component on the slice through iota(alpha, beta): z = t + ir maps to u + iv.
/// Throws KindError for raw functions.
std::function<Complex(Complex)> restrict_to_slice(const QFunction& f, double alpha, double beta);

QFunction constant(const Quaternion& q);
QFunction identity_function();
QFunction power_function(int n);
QFunction product(const QFunction& f, const QFunction& g);
QFunction sum(const QFunction& f, const QFunction& g);
QFunction scaled(const QFunction& f, double s);
QFunction conjugate(const QFunction& f);
/// Pointwise algebraic inverse f(p)^-1.
QFunction reciprocal(const QFunction& f);

}  // namespace fueterlab
