#pragma once

#include "json.hpp"

#include "fueterlab/classify.hpp"
#include "fueterlab/laurent.hpp"

namespace fueterlab {

using Json = nlohmann::ordered_json;

Json to_json(const SampleGrid& grid);
Json to_json(const DiffConfig& cfg, const Tolerance& tol);
Json to_json(const ClassStats& stats);

/// {function, grid, config, CE, CI, class_I, class_II, class_III, regular, centrality, inclusion_consistent}
Json to_json(const ClassificationReport& report);

/// {center, radii, window, n_range, quadrature_points, coefficients: {"n": [[ [re, im] ... ] ... ]}}
/// with coefficients[n][alpha_idx][beta_idx].
Json to_json(const LaurentSeries& series);

/// Inverse of to_json(LaurentSeries); the result carries no source function.
LaurentSeries series_from_json(const Json& doc);

}  // namespace fueterlab
