#include "fueterlab/function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fueterlab/errors.hpp"

namespace fueterlab {

const char* to_string(FunctionKind kind) {
    switch (kind) {
        case FunctionKind::Raw: return "raw";
        case FunctionKind::CE: return "CE";
        case FunctionKind::CI: return "CI";
    }
    return "raw";
}

namespace {

FunctionKind weaker(FunctionKind a, FunctionKind b) {
    return static_cast<int>(a) < static_cast<int>(b) ? a : b;
}

// Exact-order integer power; std::pow(complex, int) goes through exp/log.
Complex ipow(Complex z, int n) {
    Complex base = n < 0 ? 1.0 / z : z;
    unsigned e = n < 0 ? static_cast<unsigned>(-(n + 1)) + 1u : static_cast<unsigned>(n);
    Complex result = 1.0;
    while (e != 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

}  // namespace

// ---------------------------------------------------------------- DomainBox

bool DomainBox::unbounded() const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return t_min == -inf && t_max == inf && r_min <= 0.0 && r_max == inf &&
           alpha_min <= -std::numbers::pi && alpha_max >= std::numbers::pi && beta_min <= 0.0 &&
           beta_max >= std::numbers::pi;
}

bool DomainBox::contains(const Quaternion& p) const {
    if (unbounded()) return true;
    if (p.t < t_min || p.t > t_max) return false;
    const double r = p.imag_norm();
    if (r < r_min || r > r_max) return false;
    if (r == 0.0) return r_min <= 0.0;
    const double alpha = std::atan2(p.y, p.x);
    const double beta = std::atan2(std::hypot(p.x, p.y), p.z);
    const double a = alpha == -std::numbers::pi ? std::numbers::pi : alpha;
    return a >= alpha_min && a <= alpha_max && beta >= beta_min && beta <= beta_max;
}

DomainBox DomainBox::intersect(const DomainBox& o) const {
    return {std::max(t_min, o.t_min),         std::min(t_max, o.t_max),
            std::max(r_min, o.r_min),         std::min(r_max, o.r_max),
            std::max(alpha_min, o.alpha_min), std::min(alpha_max, o.alpha_max),
            std::max(beta_min, o.beta_min),   std::min(beta_max, o.beta_max)};
}

// --------------------------------------------------------------- SampleGrid

SampleGrid::SampleGrid(Range t, Range r, Range alpha, Range beta, int per_axis)
    : t_(t), r_(r), alpha_(alpha), beta_(beta), n_(per_axis) {
    if (per_axis < 2) throw std::invalid_argument("grid needs at least 2 points per axis");
    for (const Range* rg : {&t_, &r_, &alpha_, &beta_}) {
        if (!(rg->lo <= rg->hi) || !std::isfinite(rg->lo) || !std::isfinite(rg->hi))
            throw std::invalid_argument("grid range must be finite with lo <= hi");
    }
    if (r_.lo < kMinRadius) throw std::invalid_argument("grid r range must stay >= 0.1");
    if (beta_.lo < 0.0 || beta_.hi > std::numbers::pi)
        throw std::invalid_argument("grid beta range must lie in [0, pi]");
    // sin is concave on [0, pi], so the minimum over a range sits at an endpoint.
    if (std::min(std::sin(beta_.lo), std::sin(beta_.hi)) < kMinSinBeta)
        throw std::invalid_argument("grid beta range must keep sin(beta) >= 0.1");
    if (alpha_.lo < -std::numbers::pi || alpha_.hi > std::numbers::pi)
        throw std::invalid_argument("grid alpha range must lie in [-pi, pi]");
}

SampleGrid SampleGrid::default_grid() {
    return SampleGrid({-1.0, 1.0}, {0.5, 1.5}, {-2.5, 2.5}, {0.4, std::numbers::pi - 0.4}, 8);
}

std::size_t SampleGrid::size() const {
    const auto n = static_cast<std::size_t>(n_);
    return n * n * n * n;
}

double SampleGrid::node(const Range& range, int n, int k) {
    return range.lo + (range.hi - range.lo) * static_cast<double>(k) / static_cast<double>(n - 1);
}

SphericalPoint SampleGrid::point(std::size_t index) const {
    const auto n = static_cast<std::size_t>(n_);
    const int ib = static_cast<int>(index % n);
    index /= n;
    const int ia = static_cast<int>(index % n);
    index /= n;
    const int ir = static_cast<int>(index % n);
    index /= n;
    const int it = static_cast<int>(index);
    return {node(t_, n_, it), node(r_, n_, ir), node(alpha_, n_, ia), node(beta_, n_, ib)};
}

std::vector<SphericalPoint> SampleGrid::points() const {
    std::vector<SphericalPoint> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(point(i));
    return out;
}

// ---------------------------------------------------------------- QFunction

QFunction::QFunction(std::string name, FunctionKind kind, Evaluator evaluator, DomainBox domain)
    : name_(std::move(name)),
      kind_(kind),
      evaluator_(std::make_shared<const Evaluator>(std::move(evaluator))),
      domain_(domain) {}

QFunction QFunction::renamed(std::string name) const {
    QFunction copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

CEParts decompose(const Quaternion& value, const SphericalPoint& s) {
    return {value.t, imag_dot(value, iota(s))};
}

CEParts decompose(const QFunction& f, const SphericalPoint& s) { return decompose(f(s), s); }

// -------------------------------------------------------------- ComplexStem

ComplexStem ComplexStem::laurent(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.n < b.n; });
    // Merge repeated exponents.
    std::vector<Term> merged;
    for (const Term& term : terms) {
        if (!merged.empty() && merged.back().n == term.n)
            merged.back().c += term.c;
        else
            merged.push_back(term);
    }
    return ComplexStem(Form::Laurent, std::move(merged));
}

ComplexStem ComplexStem::monomial(int n, Complex c) { return laurent({{n, c}}); }

ComplexStem ComplexStem::named(const std::string& name) {
    if (name == "exp") return ComplexStem(Form::Exp, {});
    if (name == "log") return ComplexStem(Form::Log, {});
    if (name == "sin") return ComplexStem(Form::Sin, {});
    if (name == "cos") return ComplexStem(Form::Cos, {});
    if (name == "logtan") return ComplexStem(Form::LogTan, {});
    throw SpecError("unknown closed-form stem '" + name + "'");
}

Complex ComplexStem::eval_unchecked(Complex z) const {
    switch (form_) {
        case Form::Laurent: {
            Complex acc = 0.0;
            for (const Term& term : terms_) acc += term.c * ipow(z, term.n);
            return acc;
        }
        case Form::Exp: return std::exp(z);
        case Form::Log: return std::log(z);
        case Form::Sin: return std::sin(z);
        case Form::Cos: return std::cos(z);
        case Form::LogTan: return std::log(std::tan(z / 2.0));
    }
    return 0.0;
}

Complex ComplexStem::operator()(Complex z) const {
    if (!(z.imag() > 0.0)) throw DomainError("stem evaluated off the upper half plane");
    return eval_unchecked(z);
}

Complex ComplexStem::derivative(Complex z) const {
    if (!(z.imag() > 0.0)) throw DomainError("stem derivative off the upper half plane");
    if (form_ == Form::Laurent) {
        Complex acc = 0.0;
        for (const Term& term : terms_) {
            if (term.n != 0) acc += term.c * static_cast<double>(term.n) * ipow(z, term.n - 1);
        }
        return acc;
    }
    // Five-point real-direction difference; any analytic function has f' = df/dx.
    const double h = 1e-3 * std::max(1.0, std::abs(z));
    return (8.0 * (eval_unchecked(z + h) - eval_unchecked(z - h)) -
            (eval_unchecked(z + 2.0 * h) - eval_unchecked(z - 2.0 * h))) /
           (12.0 * h);
}

std::string ComplexStem::name() const {
    switch (form_) {
        case Form::Exp: return "exp";
        case Form::Log: return "log";
        case Form::Sin: return "sin";
        case Form::Cos: return "cos";
        case Form::LogTan: return "logtan";
        case Form::Laurent: break;
    }
    std::ostringstream os;
    os.precision(17);
    os << "stem:";
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (k) os << ',';
        os << terms_[k].n << ':' << terms_[k].c.real() << ':' << terms_[k].c.imag();
    }
    return os.str();
}

double ComplexStem::cr_residual(Complex z, double h) const {
    const Complex ih(0.0, h);
    const Complex dx = ((*this)(z + h) - (*this)(z - h)) / (2.0 * h);
    const Complex dy = ((*this)(z + ih) - (*this)(z - ih)) / (2.0 * h);
    return std::abs(dx + Complex(0.0, 1.0) * dy);
}

// ------------------------------------------------------------ constructions

QFunction ci_lift(const ComplexField& g, std::string name) {
    return QFunction(std::move(name), FunctionKind::CI, [g](const Quaternion& p) {
        const double r = p.imag_norm();
        if (r == 0.0) throw DomainError("slice lift undefined on the real axis");
        const Complex w = g(Complex(p.t, r));
        return Quaternion(w.real()) + p.imag() * (w.imag() / r);
    });
}

QFunction cullen_extend(const ComplexStem& stem) {
    return ci_lift(ComplexField{stem.name(), [stem](Complex z) { return stem(z); }}, stem.name());
}

QFunction from_uv(ScalarField u, ScalarField v, std::string name, FunctionKind kind) {
    return QFunction(std::move(name), kind, [u = std::move(u), v = std::move(v)](const Quaternion& p) {
        const SphericalPoint s = to_spherical(p);
        return Quaternion(u(s)) + iota(s) * v(s);
    });
}

std::function<Complex(Complex)> restrict_to_slice(const QFunction& f, double alpha, double beta) {
    if (!f.is_ce()) throw KindError("restrict_to_slice needs a CE function, got raw '" + f.name() + "'");
    return [f, alpha, beta](Complex z) {
        if (!(z.imag() > 0.0)) throw DomainError("slice point off the upper half plane");
        const SphericalPoint s{z.real(), z.imag(), alpha, beta};
        const CEParts parts = decompose(f, s);
        return Complex(parts.u, parts.v);
    };
}

QFunction constant(const Quaternion& q) {
    std::ostringstream os;
    os << "constant" << q;
    const bool real = q.imag().norm2() == 0.0;
    return QFunction(os.str(), real ? FunctionKind::CI : FunctionKind::Raw,
                     [q](const Quaternion&) { return q; });
}

QFunction identity_function() {
    return QFunction("identity", FunctionKind::CI, [](const Quaternion& p) { return p; });
}

QFunction power_function(int n) {
    return QFunction("pow:" + std::to_string(n), FunctionKind::CI,
                     [n](const Quaternion& p) { return pow(p, n); });
}

QFunction product(const QFunction& f, const QFunction& g) {
    return QFunction("product:" + f.name() + "*" + g.name(), weaker(f.kind(), g.kind()),
                     [f, g](const Quaternion& p) { return f(p) * g(p); },
                     f.domain().intersect(g.domain()));
}

QFunction sum(const QFunction& f, const QFunction& g) {
    return QFunction("sum:" + f.name() + "+" + g.name(), weaker(f.kind(), g.kind()),
                     [f, g](const Quaternion& p) { return f(p) + g(p); },
                     f.domain().intersect(g.domain()));
}

QFunction scaled(const QFunction& f, double s) {
    std::ostringstream os;
    os << "scaled:" << s << "*" << f.name();
    return QFunction(os.str(), f.kind(), [f, s](const Quaternion& p) { return f(p) * s; }, f.domain());
}

QFunction conjugate(const QFunction& f) {
    return QFunction("conj:" + f.name(), f.kind(), [f](const Quaternion& p) { return f(p).conj(); },
                     f.domain());
}

QFunction reciprocal(const QFunction& f) {
    return QFunction("inv:" + f.name(), f.kind(), [f](const Quaternion& p) { return inv(f(p)); },
                     f.domain());
}

}  // namespace fueterlab
