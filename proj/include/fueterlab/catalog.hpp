#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fueterlab/function.hpp"

namespace fueterlab {

/// alpha + iota log tan(beta / 2).
QFunction rho_function();
/// atan(y / z) + iota atanh(x / r).
QFunction varrho_function();
/// atan(z / x) + iota atanh(y / r).
QFunction sigma_function();
/// (x / r) iota.
QFunction x_over_r_iota_function();

/// Expected membership verdicts; nullopt means "not pinned".
struct ExpectedClasses {
    std::optional<bool> class_I;
    std::optional<bool> class_II;
    std::optional<bool> class_III;
    std::optional<bool> regular;
};

struct WitnessEntry {
    std::string name;
    QFunction function;
    ExpectedClasses expected;
    std::string origin;
};

/// Named entries: identity, rho, varrho, sigma, x-over-r-iota and pow:n for n in [-2, 4].
std::vector<WitnessEntry> witness_catalog();

/// Function spec grammar:
///   identity | rho | varrho | sigma | x-over-r-iota | pow:<int> | stem:<n:re:im,...>
///   L:<stem-spec> | chiral:<spec> | mirror:<spec> | product:<spec>*<spec> | sum:<spec>+<spec>
/// Throws SpecError for anything else.
QFunction parse_function(const std::string& spec);

/// Stem spec: identity | pow:<int> | stem:<n:re:im,...> | <n:re:im,...> | exp | log | sin | cos | logtan.
ComplexStem parse_stem(const std::string& spec);

}  // namespace fueterlab
