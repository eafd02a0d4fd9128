#include "fueterlab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fueterlab/errors.hpp"

namespace fueterlab {

ComplexField rinehart_L(const ComplexStem& stem) {
    return {"L:" + stem.name(), [stem](Complex z) {
                const double y = z.imag();
                if (!(y > 0.0)) throw DomainError("Rinehart transform needs Im z > 0");
                const Complex i(0.0, 1.0);
                return (i / y) * stem.derivative(z) - i * (stem(z).imag() / (y * y));
            }};
}

double rinehart_residual(const ComplexField& g, Complex z, double h) {
    const Complex ih(0.0, h);
    const Complex gx = (g(z + h) - g(z - h)) / (2.0 * h);
    const Complex gy = (g(z + ih) - g(z - ih)) / (2.0 * h);
    return std::abs(gx + Complex(0.0, 1.0) * gy - 2.0 * g(z).imag() / z.imag());
}

QFunction ci_extend_rinehart(const ComplexField& g, const SampleGrid& samples, const Tolerance& tol) {
    const int n = samples.per_axis();
    for (int it = 0; it < n; ++it) {
        for (int ir = 0; ir < n; ++ir) {
            const Complex z(SampleGrid::node(samples.t(), n, it), SampleGrid::node(samples.r(), n, ir));
            const double residual = rinehart_residual(g, z);
            if (residual > tol.at(std::abs(g(z)))) {
                std::ostringstream os;
                os << "'" << g.name << "' violates the Rinehart condition at z = " << z << " (residual "
                   << residual << ")";
                throw PreconditionError(os.str());
            }
        }
    }
    return ci_lift(g, g.name);
}

QFunction chiral_difference_unchecked(const QFunction& f, const DiffConfig& inner) {
    inner.validate();
    return QFunction("chiral:" + f.name(), FunctionKind::Raw, [f, inner](const Quaternion& p) {
        const CartesianGradient g = cartesian_gradient(f, p, inner);
        return g.left() - g.right();
    });
}

QFunction chiral_difference(const QFunction& f, const DiffConfig& inner, const SampleGrid& check_grid) {
    const ClassificationReport report = classify(f, check_grid);
    if (!report.class_II.passed())
        throw PreconditionError("chiral difference needs a class II input; '" + f.name() + "' is " +
                                to_string(report.class_II.verdict));
    return chiral_difference_unchecked(f, inner);
}

QFunction mirror(const QFunction& f) {
    const DomainBox& d = f.domain();
    // Conjugation keeps (t, r) and sends iota to -iota: beta -> pi - beta, alpha -> alpha +- pi.
    DomainBox reflected = d;
    reflected.beta_min = std::numbers::pi - d.beta_max;
    reflected.beta_max = std::numbers::pi - d.beta_min;
    if (!(d.alpha_min <= -std::numbers::pi && d.alpha_max >= std::numbers::pi)) {
        reflected.alpha_min = -std::numbers::pi;
        reflected.alpha_max = std::numbers::pi;
    }
    return QFunction("mirror:" + f.name(), f.kind(),
                     [f](const Quaternion& p) {
                         const Quaternion q = p.conj();
                         if (!f.domain().contains(q))
                             throw DomainError("mirror: reflected point leaves the domain of '" + f.name() + "'");
                         return f(q).conj();
                     },
                     reflected);
}

}  // namespace fueterlab
