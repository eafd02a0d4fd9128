#include "fueterlab/report.hpp"

#include <string>

namespace fueterlab {

Json to_json(const SampleGrid& grid) {
    return Json{{"t", {grid.t().lo, grid.t().hi}},
                {"r", {grid.r().lo, grid.r().hi}},
                {"alpha", {grid.alpha().lo, grid.alpha().hi}},
                {"beta", {grid.beta().lo, grid.beta().hi}},
                {"n_per_axis", grid.per_axis()},
                {"points", grid.size()}};
}

Json to_json(const DiffConfig& cfg, const Tolerance& tol) {
    return Json{{"h", cfg.h}, {"scheme", to_string(cfg.scheme)}, {"tol_abs", tol.abs}, {"tol_rel", tol.rel}};
}

Json to_json(const ClassStats& stats) {
    return Json{{"max", stats.max},
                {"mean", stats.mean},
                {"verdict", to_string(stats.verdict)},
                {"max_tolerance_ratio", stats.max_ratio},
                {"pass_fraction", stats.pass_fraction},
                {"singular_points", stats.singular}};
}

Json to_json(const ClassificationReport& report) {
    return Json{{"function", report.function},
                {"grid", to_json(report.grid)},
                {"config", to_json(report.config, report.tolerance)},
                {"CE", to_json(report.ce)},
                {"CI", to_json(report.ci)},
                {"class_I", to_json(report.class_I)},
                {"class_II", to_json(report.class_II)},
                {"class_III", to_json(report.class_III)},
                {"regular", to_json(report.regular)},
                {"centrality", to_json(report.centrality)},
                {"inclusion_consistent", report.inclusion_consistent}};
}

Json to_json(const LaurentSeries& series) {
    const AnnulusRegion& region = series.region();
    Json coefficients = Json::object();
    for (int n = series.n_min(); n <= series.n_max(); ++n) {
        Json by_alpha = Json::array();
        for (int ia = 0; ia < region.window_points; ++ia) {
            Json by_beta = Json::array();
            for (int ib = 0; ib < region.window_points; ++ib) {
                const Complex a = series.coefficient(n, ia, ib);
                by_beta.push_back({a.real(), a.imag()});
            }
            by_alpha.push_back(std::move(by_beta));
        }
        coefficients[std::to_string(n)] = std::move(by_alpha);
    }
    return Json{{"center", {region.c1, region.c2}},
                {"radii", {region.inner, region.outer}},
                {"window",
                 {{"alpha", {region.alpha.lo, region.alpha.hi}},
                  {"beta", {region.beta.lo, region.beta.hi}},
                  {"points", region.window_points}}},
                {"n_range", {series.n_min(), series.n_max()}},
                {"quadrature_points", series.quadrature_points()},
                {"coefficients", std::move(coefficients)}};
}

LaurentSeries series_from_json(const Json& doc) {
    AnnulusRegion region;
    region.c1 = doc.at("center").at(0).get<double>();
    region.c2 = doc.at("center").at(1).get<double>();
    region.inner = doc.at("radii").at(0).get<double>();
    region.outer = doc.at("radii").at(1).get<double>();
    const Json& window = doc.at("window");
    region.alpha = {window.at("alpha").at(0).get<double>(), window.at("alpha").at(1).get<double>()};
    region.beta = {window.at("beta").at(0).get<double>(), window.at("beta").at(1).get<double>()};
    region.window_points = window.at("points").get<int>();
    region.validate();

    const int n_min = doc.at("n_range").at(0).get<int>();
    const int n_max = doc.at("n_range").at(1).get<int>();
    const int w = region.window_points;
    std::vector<std::vector<Complex>> table;
    for (int n = n_min; n <= n_max; ++n) {
        const Json& by_alpha = doc.at("coefficients").at(std::to_string(n));
        std::vector<Complex> cells(static_cast<std::size_t>(w * w));
        for (int ia = 0; ia < w; ++ia) {
            for (int ib = 0; ib < w; ++ib) {
                const Json& pair = by_alpha.at(static_cast<std::size_t>(ia)).at(static_cast<std::size_t>(ib));
                cells[static_cast<std::size_t>(ia * w + ib)] = {pair.at(0).get<double>(), pair.at(1).get<double>()};
            }
        }
        table.push_back(std::move(cells));
    }
    return LaurentSeries(region, n_min, n_max, doc.at("quadrature_points").get<int>(), std::move(table));
}

}  // namespace fueterlab
