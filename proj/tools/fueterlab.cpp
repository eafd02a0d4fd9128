#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fueterlab/catalog.hpp"
#include "fueterlab/classify.hpp"
#include "fueterlab/errors.hpp"
#include "fueterlab/laurent.hpp"
#include "fueterlab/report.hpp"
#include "fueterlab/verify.hpp"

namespace {

using namespace fueterlab;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<double> parse_list(const std::string& text, std::size_t count, const std::string& flag) {
    std::vector<double> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(flag + ": '" + item + "' is not a number");
        }
    }
    if (values.size() != count)
        throw UsageError(flag + " expects " + std::to_string(count) + " comma-separated values");
    return values;
}

int as_count(double value, const std::string& flag) {
    if (value != static_cast<int>(value)) throw UsageError(flag + ": point count must be an integer");
    return static_cast<int>(value);
}

std::string timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

void emit(Json doc, const std::string& out_path) {
    doc["timestamp"] = timestamp();
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot open '" + out_path + "' for writing");
    out << text;
}

struct NumericFlags {
    std::optional<double> h;
    std::optional<std::string> scheme;
    std::optional<double> tol_abs;
    std::optional<double> tol_rel;

    void attach(CLI::App* app) {
        app->add_option("--h", h, "Finite-difference step");
        app->add_option("--scheme", scheme, "central | richardson");
        app->add_option("--tol-abs", tol_abs, "Absolute tolerance");
        app->add_option("--tol-rel", tol_rel, "Relative tolerance");
    }

    DiffConfig config() const {
        DiffConfig cfg;
        if (h) cfg.h = *h;
        if (scheme) cfg.scheme = scheme_from_string(*scheme);
        cfg.validate();
        return cfg;
    }

    Tolerance tolerance() const {
        Tolerance tol;
        if (tol_abs) tol.abs = *tol_abs;
        if (tol_rel) tol.rel = *tol_rel;
        if (!(tol.abs >= 0.0) || !(tol.rel >= 0.0)) throw UsageError("tolerances must be non-negative");
        return tol;
    }
};

SampleGrid parse_grid(const std::string& text) {
    if (text.empty()) return SampleGrid::default_grid();
    const auto v = parse_list(text, 9, "--grid");
    return SampleGrid({v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}, as_count(v[8], "--grid"));
}

int cmd_classify(const std::string& spec, const std::string& grid_text, const NumericFlags& flags,
                 const std::string& out) {
    const QFunction f = parse_function(spec);
    const SampleGrid grid = parse_grid(grid_text);
    const ClassificationReport report = classify(f, grid, flags.config(), flags.tolerance());
    emit(to_json(report), out);
    return report.inclusion_consistent ? 0 : kExitFailure;
}

int cmd_verify(std::uint64_t seed, const NumericFlags& flags, const std::string& out) {
    VerifyOptions options;
    options.seed = seed;
    options.h = flags.h;
    if (flags.scheme) options.scheme = scheme_from_string(*flags.scheme);
    if (flags.h) flags.config();
    options.tolerance = flags.tolerance();
    const VerifySummary summary = verify_props(options);

    Json checks = Json::array();
    for (const CheckResult& c : summary.checks) {
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"max_residual", c.max_residual},
                          {"threshold", c.threshold},
                          {"detail", c.detail}});
        std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.max_residual << "  " << c.detail << "\n";
    }
    Json doc{{"seed", seed}, {"checks", std::move(checks)}, {"all_passed", summary.all_passed()}};
    emit(std::move(doc), out);
    return summary.all_passed() ? 0 : kExitFailure;
}

struct LaurentFlags {
    std::string center = "0,1";
    std::string radii = "0.2,0.6";
    std::string window;
    std::string n_range = "-8,8";
    int quad = 64;
    bool check_class = false;
};

int cmd_laurent(const std::string& spec, const LaurentFlags& lf, const NumericFlags& flags, const std::string& out) {
    const QFunction f = parse_function(spec);
    AnnulusRegion region;
    const auto c = parse_list(lf.center, 2, "--center");
    const auto r = parse_list(lf.radii, 2, "--radii");
    region.c1 = c[0];
    region.c2 = c[1];
    region.inner = r[0];
    region.outer = r[1];
    if (!lf.window.empty()) {
        const auto w = parse_list(lf.window, 5, "--window");
        region.alpha = {w[0], w[1]};
        region.beta = {w[2], w[3]};
        region.window_points = as_count(w[4], "--window");
    }
    const auto n = parse_list(lf.n_range, 2, "--n-range");
    const int n_min = as_count(n[0], "--n-range");
    const int n_max = as_count(n[1], "--n-range");
    if (n_min > n_max) throw UsageError("--n-range must be increasing");

    const LaurentSeries series = laurent_coefficients(f, region, n_min, n_max, lf.quad);
    Json doc{{"function", f.name()}};
    doc.update(to_json(series));
    doc["max_reconstruction_error"] = probe_reconstruction_error(series, f);
    bool ok = true;
    if (lf.check_class) {
        Json verdicts = Json::array();
        for (const CoefficientVerdict& v : coefficient_class_check(series, flags.config(), flags.tolerance())) {
            verdicts.push_back({{"n", v.n}, {"max_residual", v.max_residual}, {"verdict", to_string(v.verdict)}});
            ok = ok && v.verdict == Verdict::Pass;
        }
        doc["class_check"] = std::move(verdicts);
    }
    emit(std::move(doc), out);
    return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quaternionic function classification and Laurent toolkit"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    std::string spec, grid_text, out;
    std::uint64_t seed = 1;
    NumericFlags flags;
    LaurentFlags lf;

    auto* classify_cmd = app.add_subcommand("classify", "Classify a function over a sample grid");
    classify_cmd->add_option("spec", spec, "Function spec")->required();
    classify_cmd->add_option("--grid", grid_text, "t0,t1,r0,r1,a0,a1,b0,b1,n_per_axis");
    classify_cmd->add_option("--out", out, "Write the report to a file");
    flags.attach(classify_cmd);

    auto* verify_cmd = app.add_subcommand("verify-props", "Run the identity verification suite");
    verify_cmd->add_option("--seed", seed, "Random seed");
    verify_cmd->add_option("--out", out, "Write the summary to a file");
    flags.attach(verify_cmd);

    auto* laurent_cmd = app.add_subcommand("laurent", "Extract per-slice Laurent coefficients");
    laurent_cmd->add_option("spec", spec, "Function spec")->required();
    laurent_cmd->add_option("--center", lf.center, "c1,c2");
    laurent_cmd->add_option("--radii", lf.radii, "inner,outer");
    laurent_cmd->add_option("--window", lf.window, "a0,a1,b0,b1,n_points");
    laurent_cmd->add_option("--n-range", lf.n_range, "n_min,n_max");
    laurent_cmd->add_option("--quad", lf.quad, "Quadrature points");
    laurent_cmd->add_flag("--check-class", lf.check_class, "Test every coefficient on the sphere");
    laurent_cmd->add_option("--out", out, "Write the series to a file");
    flags.attach(laurent_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*classify_cmd) return cmd_classify(spec, grid_text, flags, out);
        if (*verify_cmd) return cmd_verify(seed, flags, out);
        return cmd_laurent(spec, lf, flags, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
