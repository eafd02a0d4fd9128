#pragma once

#include <stdexcept>
#include <string>

namespace fueterlab {

// Evaluation outside the set where a function or operator is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The (t, r, alpha, beta) chart degenerates: r = 0 or sin(beta) = 0.
class ChartSingularity : public DomainError {
public:
    using DomainError::DomainError;
};

// Operation requires a complex-extrinsic (or intrinsic) function.
class KindError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A numerically checked precondition (analyticity, class membership) failed.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed function / stem spec string.
class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace fueterlab
