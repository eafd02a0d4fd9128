#pragma once

#include "fueterlab/classify.hpp"
#include "fueterlab/diffops.hpp"
#include "fueterlab/function.hpp"

namespace fueterlab {

/// g(z) = (i / y) f'(z) - i Im f(z) / y^2. Evaluating at y <= 0 throws DomainError.
ComplexField rinehart_L(const ComplexStem& stem);

/// |dg/dx + i dg/dy - 2 Im g / y| by central differences with step h.
double rinehart_residual(const ComplexField& g, Complex z, double h = 1e-5);

/// CI lift Re g(t + ir) + iota Im g(t + ir) of a field satisfying the Rinehart condition.
/// The condition is checked on the (t, r) nodes of `samples`; PreconditionError if it fails.
QFunction ci_extend_rinehart(const ComplexField& g, const SampleGrid& samples = SampleGrid::default_grid(),
                             const Tolerance& tol = {});

/// Default inner configuration of chiral differences: h = 1e-4 with Richardson extrapolation.
inline constexpr DiffConfig kChiralInnerConfig{1e-4, Scheme::Richardson};

/// Lazily evaluated fueter_left(f) - fueter_right(f). Each evaluation runs the inner stencils.
/// f must pass class II on `check_grid`; otherwise PreconditionError.
QFunction chiral_difference(const QFunction& f, const DiffConfig& inner = kChiralInnerConfig,
                            const SampleGrid& check_grid = SampleGrid::default_grid());

/// Same construction without the class II precondition check.
QFunction chiral_difference_unchecked(const QFunction& f, const DiffConfig& inner = kChiralInnerConfig);

/// M(f)(p) = conj(f(conj(p))). DomainError when conj(p) leaves f's domain.
QFunction mirror(const QFunction& f);

}  // namespace fueterlab
