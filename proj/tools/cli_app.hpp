#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dsii/asymptotics.hpp"
#include "dsii/curve.hpp"
#include "dsii/reflection.hpp"

namespace dsii::cli {

/// One fully validated batch-run configuration (a single JSON document; no
/// environment variables).
struct RunConfig {
  ConvexCurve curve = ConvexCurve::disk(1.0);
  int sigma = 1;
  std::vector<cplx> k_values;  // expanded sweep, sorted by (|k|, theta)
  bool auto_grid = true;
  int grid_n = 0;        // fixed-grid mode
  double grid_L = 0.0;   // fixed-grid mode (0 in auto mode: 4x circumradius)
  int grid_budget = 2048;
  double points_per_wavelength = 16.0;
  std::vector<Method> methods;
  double ds_time = 0.0;
  double tol = 1e-10;
  int max_terms = 64;
  bool richardson = false;
  AsymptoticConfig asymptotic;
  int workers = 1;
};

/// Parses and validates the JSON document; throws std::invalid_argument with
/// a field diagnostic on any problem.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config_file(const std::string& path);

/// Evaluates one (k, method) cell; sigma=-1 runs flagged as unvalidated.
ReflectionRecord evaluate(const RunConfig& cfg, cplx k, Method method);

/// sweep: one CSV row per (k, method), ordered by (|k|, theta, method label);
/// failed rows carry the error column. Returns 0, or 2 on partial failures.
int run_sweep(const RunConfig& cfg, std::ostream& csv_out, std::ostream& log);

/// compare: acceptance-style cross-method comparison; emits a JSON report and
/// a plot-data CSV plus a generated plotting script (<plotdata>.py).
int run_compare(const RunConfig& cfg, const std::string& report_path,
                const std::string& plotdata_path, std::ostream& log);

/// evolve: applies the DS II phase e^{4 i t Re k^2} to every row of a
/// reflection CSV; returns 1 naming the row on malformed input.
int run_evolve(std::istream& csv_in, double t, std::ostream& csv_out,
               std::ostream& log);

}  // namespace dsii::cli
