#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "dsii/quadrature.hpp"

using namespace dsii;
using namespace dsii::cli;

namespace {

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("config parsing: validation failures name the field") {
  CHECK_THROWS_WITH_AS(parse_config("{"), doctest::Contains("not valid JSON"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_config(R"({"k_sweep":{"list":[]}})"),
                       doctest::Contains("curve"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_config(R"({"curve":{"type":"disk","radius":1},"sigma":3,"k_sweep":{"list":[]}})"),
      doctest::Contains("sigma"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_config(R"({"curve":{"type":"disk","radius":1},"k_sweep":{"list":[[0,0]]}})"),
      doctest::Contains("k_sweep"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_config(R"({"curve":{"type":"disk","radius":1},"k_sweep":{"list":[]},"grid":{"n":100,"L":4}})"),
      doctest::Contains("grid.n"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_config(R"({"curve":{"type":"disk","radius":1},"k_sweep":{"list":[]},"methods":["nope"]})"),
      doctest::Contains("methods"), std::invalid_argument);
}

TEST_CASE("sweep: empty k list yields a header-only CSV and exit 0") {
  const auto cfg = parse_config(
      R"({"curve":{"type":"disk","radius":1},"k_sweep":{"list":[]},"methods":["closed_form_disk"]})");
  std::ostringstream csv, log;
  CHECK(run_sweep(cfg, csv, log) == 0);
  CHECK(csv.str() == reflection_csv_header() + ",error\n");
}

TEST_CASE("sweep: 3 moduli x 2 methods -> 6 ordered rows, byte-deterministic") {
  const std::string cfg_text = R"({
    "curve": {"type":"disk","radius":1},
    "k_sweep": {"modulus":{"from":8,"to":32,"count":3,"spacing":"geometric"},"theta":0.0},
    "methods": ["numeric","closed_form_disk"],
    "tol": 1e-8})";
  const auto cfg = parse_config(cfg_text);
  std::ostringstream a, b, log;
  CHECK(run_sweep(cfg, a, log) == 0);
  CHECK(run_sweep(parse_config(cfg_text), b, log) == 0);
  CHECK(a.str() == b.str());
  CHECK(count_lines(a.str()) == 7);  // header + 6 rows

  // ordering by (|k|, theta, method label): closed_form_disk before numeric
  std::istringstream rows(a.str());
  std::string line;
  std::getline(rows, line);
  double prev_k = 0.0;
  int i = 0;
  while (std::getline(rows, line)) {
    const auto rec = from_csv_row(line.substr(0, line.rfind(',')));
    CHECK(std::abs(rec.k) >= prev_k);
    prev_k = std::abs(rec.k);
    CHECK(rec.method == (i % 2 == 0 ? Method::ClosedFormDisk : Method::Numeric));
    ++i;
  }
}

TEST_CASE("sweep: infeasible grid produces a row error and exit 2") {
  const auto cfg = parse_config(R"({
    "curve": {"type":"disk","radius":1},
    "k_sweep": {"list":[[500,0]]},
    "grid_budget": 1024,
    "methods": ["numeric"]})");
  std::ostringstream csv, log;
  CHECK(run_sweep(cfg, csv, log) == 2);
  CHECK(csv.str().find("budget") != std::string::npos);
  CHECK(log.str().find("1 of 1") != std::string::npos);
}

TEST_CASE("sweep: worker pool matches the sequential output") {
  const std::string base = R"({
    "curve": {"type":"disk","radius":1},
    "k_sweep": {"list":[[30,0],[50,0],[70,0.5]]},
    "methods": ["asymptotic_full","asymptotic_spa","hybrid"],
    "k_threshold": 10.0%EXTRA%})";
  auto with = [&](const std::string& extra) {
    std::string t = base;
    t.replace(t.find("%EXTRA%"), 7, extra);
    std::ostringstream csv, log;
    REQUIRE(run_sweep(parse_config(t), csv, log) == 0);
    return csv.str();
  };
  CHECK(with("") == with(R"(,"workers":3)"));
}

TEST_CASE("hybrid rows carry the delegate tag") {
  const auto cfg = parse_config(R"({
    "curve": {"type":"disk","radius":1},
    "k_sweep": {"list":[[8,0],[64,0]]},
    "methods": ["hybrid"],
    "k_threshold": 32.0,
    "tol": 1e-8})");
  std::ostringstream csv, log;
  REQUIRE(run_sweep(cfg, csv, log) == 0);
  CHECK(csv.str().find("hybrid:numeric") != std::string::npos);
  CHECK(csv.str().find("hybrid:asymptotic_full") != std::string::npos);
}

TEST_CASE("evolve: t = 0 reproduces the input numerically") {
  const auto cfg = parse_config(R"({
    "curve": {"type":"disk","radius":1},
    "k_sweep": {"list":[[4,0],[9,0.4]]},
    "methods": ["asymptotic_full"]})");
  std::ostringstream csv, log;
  REQUIRE(run_sweep(cfg, csv, log) == 0);

  std::istringstream in(csv.str());
  std::ostringstream out;
  CHECK(run_evolve(in, 0.0, out, log) == 0);
  CHECK(out.str() == csv.str());
}

TEST_CASE("evolve: k=2, t=pi/16 negates R and preserves the modulus") {
  ReflectionRecord rec;
  rec.k = 2.0;
  rec.R = cplx(0.125, -0.5);
  rec.method = Method::Numeric;
  std::istringstream in(reflection_csv_header() + "\n" + to_csv_row(rec) + "\n");
  std::ostringstream out, log;
  REQUIRE(run_evolve(in, pi / 16.0, out, log) == 0);

  std::istringstream parse(out.str());
  std::string line;
  std::getline(parse, line);
  std::getline(parse, line);
  const auto evolved = from_csv_row(line);
  CHECK(std::abs(evolved.R + rec.R) < 1e-15);
  CHECK(std::abs(std::abs(evolved.R) - std::abs(rec.R)) <= 1e-16);
  CHECK(evolved.time == pi / 16.0);
}

TEST_CASE("evolve: malformed rows fail with the row number") {
  std::ostringstream out, log;
  std::istringstream bad1("not,a,header\n");
  CHECK(run_evolve(bad1, 1.0, out, log) == 1);

  std::istringstream bad2(reflection_csv_header() + "\n1,2,3\n");
  log.str("");
  CHECK(run_evolve(bad2, 1.0, out, log) == 1);
  CHECK(log.str().find("row 2") != std::string::npos);

  ReflectionRecord rec;
  rec.k = 1.0;
  rec.R = 1.0;
  rec.time = 0.5;  // already evolved
  std::istringstream bad3(reflection_csv_header() + "\n" + to_csv_row(rec) + "\n");
  log.str("");
  CHECK(run_evolve(bad3, 1.0, out, log) == 1);
  CHECK(log.str().find("time != 0") != std::string::npos);
}

TEST_CASE("compare: disk report carries diff_scaled; sigma=-1 is flagged") {
  const auto cfg = parse_config(R"({
    "curve": {"type":"disk","radius":1},
    "sigma": -1,
    "k_sweep": {"list":[[8,0]]},
    "tol": 1e-8})");
  const std::string rep = "/tmp/dsii_test_report.json";
  const std::string plot = "/tmp/dsii_test_plot.csv";
  std::ostringstream log;
  CHECK(run_compare(cfg, rep, plot, log) == 0);
  CHECK(log.str().find("unvalidated") != std::string::npos);

  std::ifstream repin(rep);
  std::stringstream repss;
  repss << repin.rdbuf();
  CHECK(repss.str().find("\"diff_scaled\"") != std::string::npos);
  CHECK(repss.str().find("\"unvalidated_regime\": true") != std::string::npos);
  CHECK(repss.str().find("\"min_abs_phase_at_poles\"") != std::string::npos);
  CHECK(repss.str().find("\"leading\"") != std::string::npos);
  CHECK(repss.str().find("\"correction\"") != std::string::npos);

  std::ifstream plotin(plot);
  std::string header;
  std::getline(plotin, header);
  CHECK(header.find("diff_scaled") != std::string::npos);
  CHECK(std::ifstream(plot + ".py").good());
}

TEST_CASE("compare: ellipse report includes the leading-term quadrature check") {
  const auto cfg = parse_config(R"({
    "curve": {"type":"ellipse","a":2,"b":1},
    "k_sweep": {"list":[[4,0]]},
    "tol": 1e-8,
    "d_omega_source": "oracle"})");
  const std::string rep = "/tmp/dsii_test_report_e.json";
  const std::string plot = "/tmp/dsii_test_plot_e.csv";
  std::ostringstream log;
  CHECK(run_compare(cfg, rep, plot, log) == 0);
  std::ifstream repin(rep);
  std::stringstream repss;
  repss << repin.rdbuf();
  CHECK(repss.str().find("ellipse_leading_check") != std::string::npos);
}

TEST_CASE("sigma = -1 flips the leading term in closed form and asymptotics") {
  auto base = parse_config(R"({
    "curve": {"type":"disk","radius":1},
    "k_sweep": {"list":[[60,0]]},
    "methods": ["asymptotic_spa"]})");
  const cplx k{60.0, 0.0};
  const auto plus = evaluate(base, k, Method::AsymptoticSpa);
  base.sigma = -1;
  const auto minus = evaluate(base, k, Method::AsymptoticSpa);
  CHECK(std::abs(plus.R + minus.R) < 1e-14);
}
