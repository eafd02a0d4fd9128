#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fueterlab/diffops.hpp"
#include "fueterlab/function.hpp"
#include "fueterlab/laurent.hpp"

namespace fueterlab {

struct VerifyOptions {
    std::uint64_t seed = 1;
    /// Replaces every check's pinned step when set.
    std::optional<double> h;
    std::optional<Scheme> scheme;
    Tolerance tolerance;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    double max_residual = 0.0;
    double threshold = 0.0;
    std::string detail;
};

struct VerifySummary {
    std::vector<CheckResult> checks;

    bool all_passed() const;
};

/// Runs every identity and class-membership check of the toolkit. Never throws for numerical
/// degradation: a check that cannot be evaluated is reported as failed with the error in `detail`.
VerifySummary verify_props(const VerifyOptions& options = {});

/// Random sum of quaternion-coefficient monomials t^a x^b y^c z^d (total degree <= 3), optionally
/// multiplied by a second such polynomial. Raw kind.
QFunction random_polynomial_function(std::mt19937_64& rng, const std::string& name);

/// Floating-point floor of a partial Laurent sum over |n| <= n_abs_max at distance rho from the
/// centre, for |f| <= f_max on the contour. Added to truncation bounds that fall below it.
double roundoff_floor(double rho, const AnnulusRegion& region, int n_abs_max, double f_max);

/// Uniform random point of the default sample box (t, r, alpha, beta).
SphericalPoint random_grid_point(std::mt19937_64& rng);

}  // namespace fueterlab
