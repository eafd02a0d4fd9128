#include "fueterlab/catalog.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "fueterlab/errors.hpp"
#include "fueterlab/generators.hpp"

namespace fueterlab {

QFunction rho_function() {
    return from_uv([](const SphericalPoint& s) { return s.alpha; },
                   [](const SphericalPoint& s) { return std::log(std::tan(s.beta / 2.0)); }, "rho");
}

QFunction varrho_function() {
    return QFunction("varrho", FunctionKind::CE, [](const Quaternion& p) {
        const Quaternion unit = iota_of(p);
        return Quaternion(std::atan(p.y / p.z)) + unit * std::atanh(p.x / p.imag_norm());
    });
}

QFunction sigma_function() {
    return QFunction("sigma", FunctionKind::CE, [](const Quaternion& p) {
        const Quaternion unit = iota_of(p);
        return Quaternion(std::atan(p.z / p.x)) + unit * std::atanh(p.y / p.imag_norm());
    });
}

QFunction x_over_r_iota_function() {
    return QFunction("x-over-r-iota", FunctionKind::CE, [](const Quaternion& p) {
        const double r = p.imag_norm();
        if (r == 0.0) throw ChartSingularity("x-over-r-iota undefined on the real axis");
        return p.imag() * (p.x / (r * r));
    });
}

std::vector<WitnessEntry> witness_catalog() {
    std::vector<WitnessEntry> out;
    const ExpectedClasses two_not_three{true, true, false, false};
    out.push_back({"identity", identity_function(), {true, true, true, false}, "identity map"});
    out.push_back({"rho", rho_function(), two_not_three, "spherical log-tan witness"});
    out.push_back({"varrho", varrho_function(), two_not_three, "rotated log-tan witness (y, z, x)"});
    out.push_back({"sigma", sigma_function(), two_not_three, "rotated log-tan witness (z, x, y)"});
    out.push_back({"x-over-r-iota", x_over_r_iota_function(), {true, false, false, false},
                   "class I witness outside class II"});
    for (int n = -2; n <= 4; ++n) {
        // pow:0 is the constant 1 and therefore trivially regular.
        out.push_back({"pow:" + std::to_string(n), power_function(n), {true, true, true, n == 0},
                       "slice-substitution lift of z^n"});
    }
    return out;
}

namespace {

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

int parse_int(const std::string& text, const std::string& context) {
    int value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (!text.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last)
        throw SpecError("expected an integer in '" + context + "', got '" + text + "'");
    return value;
}

double parse_double(const std::string& text, const std::string& context) {
    try {
        std::size_t used = 0;
        const double value = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw SpecError("expected a number in '" + context + "', got '" + text + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) parts.push_back(item);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

ComplexStem parse_laurent_terms(const std::string& body, const std::string& spec) {
    if (body.empty()) throw SpecError("empty Laurent term list in '" + spec + "'");
    std::vector<ComplexStem::Term> terms;
    for (const std::string& term : split(body, ',')) {
        const auto fields = split(term, ':');
        if (fields.size() != 3) throw SpecError("Laurent term must be n:re:im in '" + spec + "', got '" + term + "'");
        terms.push_back({parse_int(fields[0], spec), Complex(parse_double(fields[1], spec), parse_double(fields[2], spec))});
    }
    return ComplexStem::laurent(std::move(terms));
}

// Splits "a<sep>b" at the first separator that leaves both halves parseable.
std::pair<QFunction, QFunction> parse_binary(const std::string& body, char sep, const std::string& spec) {
    for (std::size_t pos = body.find(sep); pos != std::string::npos; pos = body.find(sep, pos + 1)) {
        try {
            return {parse_function(body.substr(0, pos)), parse_function(body.substr(pos + 1))};
        } catch (const SpecError&) {
        }
    }
    throw SpecError("cannot split '" + spec + "' into two function specs at '" + std::string(1, sep) + "'");
}

}  // namespace

ComplexStem parse_stem(const std::string& spec) {
    if (spec == "identity") return ComplexStem::monomial(1);
    if (starts_with(spec, "pow:")) return ComplexStem::monomial(parse_int(spec.substr(4), spec));
    if (starts_with(spec, "stem:")) return parse_laurent_terms(spec.substr(5), spec);
    if (spec == "exp" || spec == "log" || spec == "sin" || spec == "cos" || spec == "logtan")
        return ComplexStem::named(spec);
    if (spec.find(':') != std::string::npos) return parse_laurent_terms(spec, spec);
    throw SpecError("unknown stem spec '" + spec + "'");
}

QFunction parse_function(const std::string& spec) {
    if (spec == "identity") return identity_function();
    if (spec == "rho") return rho_function();
    if (spec == "varrho") return varrho_function();
    if (spec == "sigma") return sigma_function();
    if (spec == "x-over-r-iota") return x_over_r_iota_function();
    if (starts_with(spec, "pow:")) return power_function(parse_int(spec.substr(4), spec));
    if (starts_with(spec, "stem:")) return cullen_extend(parse_laurent_terms(spec.substr(5), spec)).renamed(spec);
    if (starts_with(spec, "L:")) {
        const ComplexStem stem = parse_stem(spec.substr(2));
        return ci_extend_rinehart(rinehart_L(stem)).renamed(spec);
    }
    if (starts_with(spec, "chiral:")) return chiral_difference(parse_function(spec.substr(7))).renamed(spec);
    if (starts_with(spec, "mirror:")) return mirror(parse_function(spec.substr(7))).renamed(spec);
    if (starts_with(spec, "product:")) {
        auto [f, g] = parse_binary(spec.substr(8), '*', spec);
        return product(f, g).renamed(spec);
    }
    if (starts_with(spec, "sum:")) {
        auto [f, g] = parse_binary(spec.substr(4), '+', spec);
        return sum(f, g).renamed(spec);
    }
    throw SpecError("unknown function spec '" + spec + "'");
}

}  // namespace fueterlab
