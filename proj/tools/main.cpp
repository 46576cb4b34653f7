#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli_app.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Dirac d-bar scattering toolkit: reflection coefficients for "
               "compactly supported potentials, numeric and asymptotic"};
  app.require_subcommand(1);

  std::string config_path, out_path, report_path, plotdata_path, in_path;
  double t = 0.0;

  auto* sweep = app.add_subcommand("sweep", "evaluate R over a k-grid, write CSV");
  sweep->add_option("--config", config_path, "JSON run configuration")->required();
  sweep->add_option("--out", out_path, "output CSV path")->required();

  auto* compare = app.add_subcommand(
      "compare", "cross-method comparison report (numeric/asymptotic/closed form)");
  compare->add_option("--config", config_path, "JSON run configuration")->required();
  compare->add_option("--report", report_path, "output JSON report")->required();
  compare->add_option("--plotdata", plotdata_path, "output plot-data CSV")->required();

  auto* evolve = app.add_subcommand("evolve", "apply the DS II time phase to a CSV");
  evolve->add_option("--in", in_path, "input reflection CSV")->required();
  evolve->add_option("--t", t, "evolution time")->required();
  evolve->add_option("--out", out_path, "output CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) {
      const auto cfg = dsii::cli::load_config_file(config_path);
      std::ofstream os(out_path);
      if (!os) {
        std::cerr << "cannot open " << out_path << "\n";
        return 1;
      }
      return dsii::cli::run_sweep(cfg, os, std::cerr);
    }
    if (compare->parsed()) {
      const auto cfg = dsii::cli::load_config_file(config_path);
      return dsii::cli::run_compare(cfg, report_path, plotdata_path, std::cerr);
    }
    if (evolve->parsed()) {
      std::ifstream is(in_path);
      if (!is) {
        std::cerr << "cannot open " << in_path << "\n";
        return 1;
      }
      std::ofstream os(out_path);
      if (!os) {
        std::cerr << "cannot open " << out_path << "\n";
        return 1;
      }
      return dsii::cli::run_evolve(is, t, os, std::cerr);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
