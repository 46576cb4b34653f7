#include "cli_app.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "dsii/cauchy.hpp"
#include "dsii/dirac.hpp"
#include "dsii/quadrature.hpp"

namespace dsii::cli {

using nlohmann::json;

namespace {

[[noreturn]] void config_error(const std::string& field, const std::string& what) {
  throw std::invalid_argument("config field '" + field + "': " + what);
}

ConvexCurve parse_curve(const json& j) {
  if (!j.is_object() || !j.contains("type"))
    config_error("curve", "expected an object with a 'type'");
  const std::string type = j.at("type");
  if (type == "disk") return ConvexCurve::disk(j.at("radius").get<double>());
  if (type == "ellipse")
    return ConvexCurve::ellipse(j.at("a").get<double>(), j.at("b").get<double>());
  if (type == "fourier") {
    std::vector<std::pair<int, cplx>> coeffs;
    for (const auto& c : j.at("coeffs")) {
      if (!c.is_array() || c.size() != 3)
        config_error("curve.coeffs", "each entry must be [n, re, im]");
      coeffs.emplace_back(c[0].get<int>(),
                          cplx(c[1].get<double>(), c[2].get<double>()));
    }
    return ConvexCurve::fourier(coeffs);
  }
  config_error("curve.type", "unknown type '" + type + "'");
}

std::vector<cplx> parse_sweep(const json& j) {
  std::vector<cplx> ks;
  if (!j.is_object()) config_error("k_sweep", "expected an object");
  if (j.contains("list")) {
    for (const auto& e : j.at("list")) {
      if (!e.is_array() || e.size() != 2)
        config_error("k_sweep.list", "each entry must be [re, im]");
      ks.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
  } else if (j.contains("modulus") && j.at("modulus").is_object()) {
    const auto& m = j.at("modulus");
    const double from = m.at("from"), to = m.at("to");
    const int count = m.at("count");
    const std::string spacing = m.value("spacing", "geometric");
    const double theta = j.value("theta", 0.0);
    if (count < 1 || from <= 0.0 || to < from)
      config_error("k_sweep.modulus", "need 0 < from <= to and count >= 1");
    for (int i = 0; i < count; ++i) {
      const double s = count == 1 ? 0.0 : double(i) / (count - 1);
      const double r = spacing == "linear"
                           ? from + s * (to - from)
                           : from * std::pow(to / from, s);
      ks.push_back(std::polar(r, theta));
    }
  } else if (j.contains("theta") && j.at("theta").is_object()) {
    const auto& t = j.at("theta");
    const double from = t.at("from"), to = t.at("to");
    const int count = t.at("count");
    const double r = j.value("modulus", 0.0);
    if (count < 1 || r <= 0.0)
      config_error("k_sweep.theta", "need a positive 'modulus' and count >= 1");
    for (int i = 0; i < count; ++i) {
      const double s = count == 1 ? 0.0 : double(i) / (count - 1);
      ks.push_back(std::polar(r, from + s * (to - from)));
    }
  } else {
    config_error("k_sweep", "expected 'list', 'modulus' range, or 'theta' range");
  }
  for (const cplx k : ks)
    if (!(std::abs(k) > 0.0)) config_error("k_sweep", "k = 0 is not admissible");
  return ks;
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  RunConfig cfg;
  try {
    cfg.curve = parse_curve(j.at("curve"));
  } catch (const json::exception& e) {
    config_error("curve", e.what());
  }
  cfg.sigma = j.value("sigma", 1);
  if (cfg.sigma != 1 && cfg.sigma != -1) config_error("sigma", "must be +1 or -1");

  if (!j.contains("k_sweep")) config_error("k_sweep", "missing");
  cfg.k_values = parse_sweep(j.at("k_sweep"));
  std::stable_sort(cfg.k_values.begin(), cfg.k_values.end(),
                   [](cplx a, cplx b) {
                     if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
                     return std::arg(a) < std::arg(b);
                   });

  if (j.contains("grid") && !j.at("grid").is_string()) {
    const auto& g = j.at("grid");
    cfg.auto_grid = false;
    cfg.grid_n = g.at("n");
    cfg.grid_L = g.at("L");
    if (cfg.grid_n < 16 || (cfg.grid_n & (cfg.grid_n - 1)) != 0)
      config_error("grid.n", "must be a power of two >= 16");
    if (!(cfg.grid_L > 0.0)) config_error("grid.L", "must be positive");
  } else if (j.contains("grid") && j.at("grid") != "auto") {
    config_error("grid", "expected \"auto\" or {n, L}");
  }

  cfg.grid_budget = j.value("grid_budget", 2048);
  cfg.points_per_wavelength = j.value("points_per_wavelength", 16.0);
  if (cfg.points_per_wavelength < 8.0)
    config_error("points_per_wavelength", "must be >= 8 (sampling rule)");

  if (j.contains("methods")) {
    for (const auto& m : j.at("methods")) {
      try {
        cfg.methods.push_back(method_from_string(m.get<std::string>()));
      } catch (const std::exception& e) {
        config_error("methods", e.what());
      }
    }
  } else {
    cfg.methods = {Method::Numeric};
  }
  std::stable_sort(cfg.methods.begin(), cfg.methods.end(),
                   [](Method a, Method b) { return to_string(a) < to_string(b); });
  cfg.methods.erase(std::unique(cfg.methods.begin(), cfg.methods.end()),
                    cfg.methods.end());

  cfg.ds_time = j.value("time", 0.0);
  cfg.tol = j.value("tol", 1e-10);
  if (!(cfg.tol > 0.0)) config_error("tol", "must be positive");
  cfg.max_terms = j.value("max_terms", 64);
  cfg.richardson = j.value("richardson", false);
  cfg.asymptotic.k_threshold = j.value("k_threshold", 50.0);
  if (!(cfg.asymptotic.k_threshold > 0.0))
    config_error("k_threshold", "must be positive");
  cfg.asymptotic.include_correction = j.value("include_correction", true);
  if (j.contains("d_omega_source")) {
    try {
      cfg.asymptotic.d_omega_source =
          d_omega_source_from_string(j.at("d_omega_source").get<std::string>());
    } catch (const std::exception& e) {
      config_error("d_omega_source", e.what());
    }
  } else if (cfg.curve.kind() == CurveKind::Disk) {
    cfg.asymptotic.d_omega_source = DOmegaSource::ClosedFormDisk;
  }
  cfg.workers = j.value("workers", 1);
  if (cfg.workers < 1) config_error("workers", "must be >= 1");
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open config file " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_config(ss.str());
}

namespace {

NumericBackend backend_from(const RunConfig& cfg) {
  NumericBackend b;
  b.sigma = cfg.sigma;
  b.box_half_width = cfg.auto_grid ? 0.0 : cfg.grid_L;
  b.grid_budget = cfg.grid_budget;
  b.points_per_wavelength = cfg.points_per_wavelength;
  b.tol = cfg.tol;
  b.max_terms = cfg.max_terms;
  b.richardson = cfg.richardson;
  return b;
}

ReflectionRecord numeric_record(const RunConfig& cfg, const SpectralPoint& k) {
  const NumericBackend b = backend_from(cfg);
  const double L = cfg.auto_grid ? b.resolved_box(cfg.curve) : cfg.grid_L;
  int n = cfg.grid_n;
  if (cfg.auto_grid) {
    n = b.grid_size_for(cfg.curve, k.abs_k);
  } else if (n > cfg.grid_budget) {
    throw std::runtime_error("fixed grid n exceeds grid_budget");
  }
  const DiracProblem problem =
      DiracProblem::make(cfg.curve, k, cfg.sigma, n, L);
  if (cfg.richardson)
    return reflection_numeric_richardson(problem, cfg.tol, cfg.max_terms);
  return reflection_numeric(problem, solve_cgo(problem, cfg.tol, cfg.max_terms));
}

// sigma-aware asymptotic value: conj(R) = sigma * leading + correction
// (the nu = 1 operator term carries the sigma of B, cancelling the prefactor's)
ReflectionRecord asymptotic_record(const RunConfig& cfg, const SpectralPoint& k,
                                   bool with_correction) {
  AsymptoticConfig ac = cfg.asymptotic;
  ac.include_correction = with_correction;
  ReflectionRecord rec = reflection_asymptotic(cfg.curve, k, ac);
  if (cfg.sigma < 0) {
    cplx rbar = double(cfg.sigma) * leading_term(cfg.curve, k);
    if (with_correction)
      rbar += correction_term(cfg.curve, k, ac.d_omega_source);
    rec.R = std::conj(rbar);
  }
  return rec;
}

}  // namespace

ReflectionRecord evaluate(const RunConfig& cfg, cplx kv, Method method) {
  const SpectralPoint k = SpectralPoint::from_k(kv);
  ReflectionRecord rec;
  switch (method) {
    case Method::Numeric:
      rec = numeric_record(cfg, k);
      break;
    case Method::AsymptoticFull:
      rec = asymptotic_record(cfg, k, true);
      break;
    case Method::AsymptoticSpa:
      rec = asymptotic_record(cfg, k, false);
      break;
    case Method::ClosedFormDisk: {
      if (cfg.curve.kind() != CurveKind::Disk || cfg.curve.disk_radius() != 1.0)
        throw std::invalid_argument(
            "closed_form_disk applies to the unit disk only");
      rec = reflection_disk_closed_form(k.abs_k);
      rec.k = k.k;
      if (cfg.sigma < 0) rec.R = -std::conj(rec.R);  // leading term flips sign
      break;
    }
    case Method::Hybrid: {
      rec = reflection_hybrid(cfg.curve, k, cfg.asymptotic, backend_from(cfg))
                .record;
      break;
    }
  }
  if (cfg.ds_time != 0.0) rec = evolve_reflection(rec, cfg.ds_time);
  return rec;
}

int run_sweep(const RunConfig& cfg, std::ostream& csv_out, std::ostream& log) {
  struct Cell {
    cplx k;
    Method method;
    std::string row;
    bool failed = false;
  };
  std::vector<Cell> cells;
  for (const cplx k : cfg.k_values)
    for (const Method m : cfg.methods) cells.push_back({k, m, {}, false});

  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      Cell& c = cells[i];
      try {
        c.row = to_csv_row(evaluate(cfg, c.k, c.method)) + ",";
      } catch (const std::exception& e) {
        std::string what = e.what();
        std::replace(what.begin(), what.end(), ',', ';');
        std::replace(what.begin(), what.end(), '\n', ' ');
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g", c.k.real(), c.k.imag());
        c.row = std::string(buf) + ",,,," + to_string(c.method) + ",,," + what;
        c.failed = true;
      }
    }
  };
  if (cfg.workers > 1) {
    std::vector<std::thread> pool;
    for (int w = 0; w < cfg.workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  } else {
    work();
  }

  csv_out << reflection_csv_header() << ",error\n";
  int failures = 0;
  for (const Cell& c : cells) {
    csv_out << c.row << "\n";
    failures += c.failed;
  }
  if (failures > 0) {
    log << "sweep: " << failures << " of " << cells.size()
        << " rows failed (see error column)\n";
    return 2;
  }
  return 0;
}

int run_compare(const RunConfig& cfg, const std::string& report_path,
                const std::string& plotdata_path, std::ostream& log) {
  if (cfg.curve.kind() == CurveKind::Fourier)
    throw std::invalid_argument(
        "compare needs an oracle-capable curve (disk or ellipse)");
  const bool unit_disk =
      cfg.curve.kind() == CurveKind::Disk && cfg.curve.disk_radius() == 1.0;

  json report;
  report["sigma"] = cfg.sigma;
  report["unvalidated_regime"] = cfg.sigma < 0;
  if (cfg.sigma < 0) log << "compare: sigma = -1 is an unvalidated regime\n";
  report["rows"] = json::array();

  std::ofstream plot(plotdata_path);
  if (!plot) throw std::runtime_error("cannot open " + plotdata_path);
  plot << "abs_k,R_num_re,R_num_im,R_asym_re,R_asym_im,R_closed_re,R_closed_im,"
          "bessel_leading,diff_num_asym,diff_num_closed,diff_asym_closed,"
          "diff_scaled\n";

  int failures = 0;
  std::vector<double> log_k, log_diff;
  char buf[512];
  for (const cplx kv : cfg.k_values) {
    const SpectralPoint k = SpectralPoint::from_k(kv);
    json row;
    row["abs_k"] = k.abs_k;
    row["theta"] = k.theta;
    try {
      const ReflectionRecord num = numeric_record(cfg, k);
      const ReflectionRecord asym = asymptotic_record(cfg, k, true);
      const double diff = std::abs(num.R - asym.R);
      const double diff_scaled = diff * std::pow(k.abs_k, 2.5);
      const cplx lead = leading_term(cfg.curve, k);
      const cplx corr =
          correction_term(cfg.curve, k, cfg.asymptotic.d_omega_source);
      row["leading"] = {lead.real(), lead.imag()};
      row["correction"] = {corr.real(), corr.imag()};
      // the expansions assume a non-vanishing phase at the stationary points;
      // report the margin instead of assuming it
      const auto jets = pole_jets(cfg.curve, k);
      row["min_abs_phase_at_poles"] =
          std::min(std::abs(jets[0].Phi), std::abs(jets[1].Phi));
      row["R_numeric"] = {num.R.real(), num.R.imag()};
      row["R_asymptotic"] = {asym.R.real(), asym.R.imag()};
      row["numeric_error_estimate"] = num.error_estimate;
      row["diff_num_asym"] = diff;
      row["diff_scaled"] = diff_scaled;
      log_k.push_back(std::log(k.abs_k));
      log_diff.push_back(std::log(std::max(diff, 1e-300)));

      cplx closed{std::nan(""), 0.0};
      double bessel = std::nan("");
      if (unit_disk) {
        ReflectionRecord cf = reflection_disk_closed_form(k.abs_k);
        if (cfg.sigma < 0) cf.R = -std::conj(cf.R);
        closed = cf.R;
        bessel = 2.0 * bessel_j1(2.0 * k.abs_k) / k.abs_k;
        row["R_closed_form"] = {closed.real(), closed.imag()};
        row["bessel_leading"] = bessel;
        row["diff_num_closed"] = std::abs(num.R - closed);
        row["diff_asym_closed"] = std::abs(asym.R - closed);
      }
      std::snprintf(buf, sizeof(buf),
                    "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                    "%.17g,%.17g,%.17g\n",
                    k.abs_k, num.R.real(), num.R.imag(), asym.R.real(),
                    asym.R.imag(), closed.real(), closed.imag(), bessel, diff,
                    std::abs(num.R - closed), std::abs(asym.R - closed),
                    diff_scaled);
      plot << buf;
    } catch (const std::exception& e) {
      row["error"] = e.what();
      ++failures;
    }
    report["rows"].push_back(row);
  }

  // measured decay exponent of |R_num - R_asym| from a least-squares line
  if (log_k.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(log_k.size());
    for (size_t i = 0; i < log_k.size(); ++i) {
      sx += log_k[i];
      sy += log_diff[i];
      sxx += log_k[i] * log_k[i];
      sxy += log_k[i] * log_diff[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    report["decay"]["num_vs_asym_exponent"] = slope;
  }

  // leading-term cross-check against resolved 2D quadrature for ellipses
  if (cfg.curve.kind() == CurveKind::Ellipse) {
    json checks = json::array();
    for (const cplx kv : cfg.k_values) {
      const SpectralPoint k = SpectralPoint::from_k(kv);
      const cplx lead = leading_term(cfg.curve, k);
      const cplx direct = 2.0 / pi * oscillatory_area_integral(cfg.curve, k.k);
      checks.push_back({{"abs_k", k.abs_k},
                        {"diff", std::abs(lead - direct)},
                        {"diff_scaled_7_2",
                         std::abs(lead - direct) * std::pow(k.abs_k, 3.5)}});
    }
    report["ellipse_leading_check"] = checks;
  }

  std::ofstream rep(report_path);
  if (!rep) throw std::runtime_error("cannot open " + report_path);
  rep << report.dump(2) << "\n";

  std::ofstream script(plotdata_path + ".py");
  script <<
      "import csv\n"
      "import matplotlib\n"
      "matplotlib.use('Agg')\n"
      "import matplotlib.pyplot as plt\n\n"
      "ks, d_na, d_nc, d_ac = [], [], [], []\n"
      "with open('" << plotdata_path << "') as f:\n"
      "    for row in csv.DictReader(f):\n"
      "        ks.append(float(row['abs_k']))\n"
      "        d_na.append(float(row['diff_num_asym']))\n"
      "        d_nc.append(float(row['diff_num_closed']))\n"
      "        d_ac.append(float(row['diff_asym_closed']))\n"
      "plt.loglog(ks, d_na, 'o-', label='|R_num - R_asym|')\n"
      "plt.loglog(ks, d_nc, 's-', label='|R_num - R_closed|')\n"
      "plt.loglog(ks, d_ac, '^-', label='|R_asym - R_closed|')\n"
      "plt.loglog(ks, [k**-2.5 for k in ks], 'k--', label='|k|^-5/2')\n"
      "plt.xlabel('|k|')\n"
      "plt.ylabel('difference')\n"
      "plt.legend()\n"
      "plt.savefig('" << plotdata_path << ".png', dpi=150)\n";

  if (failures > 0) {
    log << "compare: " << failures << " rows failed\n";
    return 2;
  }
  return 0;
}

int run_evolve(std::istream& csv_in, double t, std::ostream& csv_out,
               std::ostream& log) {
  std::string line;
  if (!std::getline(csv_in, line)) {
    log << "evolve: empty input\n";
    return 1;
  }
  std::string header = line;
  const bool has_error_col = header == reflection_csv_header() + ",error";
  if (!has_error_col && header != reflection_csv_header()) {
    log << "evolve: unexpected header '" << header << "'\n";
    return 1;
  }
  csv_out << header << "\n";
  int lineno = 1;
  while (std::getline(csv_in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::string payload = line, suffix;
    if (has_error_col) {
      const auto pos = line.rfind(',');
      payload = line.substr(0, pos);
      suffix = line.substr(pos);
    }
    try {
      const ReflectionRecord rec = from_csv_row(payload);
      if (rec.time != 0.0)
        throw std::invalid_argument("row already evolved (time != 0)");
      csv_out << to_csv_row(evolve_reflection(rec, t)) << suffix << "\n";
    } catch (const std::exception& e) {
      log << "evolve: row " << lineno << ": " << e.what() << "\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace dsii::cli
