#include "dsii/reflection.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace dsii {

std::string to_string(Method m) {
  switch (m) {
    case Method::Numeric: return "numeric";
    case Method::AsymptoticFull: return "asymptotic_full";
    case Method::AsymptoticSpa: return "asymptotic_spa";
    case Method::ClosedFormDisk: return "closed_form_disk";
    case Method::Hybrid: return "hybrid";
  }
  throw std::logic_error("to_string(Method): bad enum value");
}

Method method_from_string(const std::string& s) {
  if (s == "numeric") return Method::Numeric;
  if (s == "asymptotic_full") return Method::AsymptoticFull;
  if (s == "asymptotic_spa") return Method::AsymptoticSpa;
  if (s == "closed_form_disk") return Method::ClosedFormDisk;
  if (s == "hybrid" || s.rfind("hybrid:", 0) == 0) return Method::Hybrid;
  throw std::invalid_argument("unknown method tag: " + s);
}

std::string ReflectionRecord::method_label() const {
  if (method == Method::Hybrid && hybrid_delegate)
    return "hybrid:" + to_string(*hybrid_delegate);
  return to_string(method);
}

ReflectionRecord reflection_numeric(const DiracProblem& problem,
                                    const CgoSolution& cgo) {
  if (!cgo.matches(problem))
    throw std::invalid_argument(
        "reflection_numeric: CGO solution does not belong to this problem");

  const int n = problem.n();
  const cplx k = problem.k().k;
  cplx rbar = 0.0;
  double area = 0.0;
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      const cplx qv = problem.q().at(ix, iy);
      if (qv == cplx(0.0, 0.0)) continue;
      const cplx z = problem.q().z_at(ix, iy);
      rbar += tau_plus(k, z) * std::conj(qv) * cgo.phi1.at(ix, iy);
      area += 1.0;
    }
  const double dz2 = problem.q().cell_area();
  rbar *= 2.0 * problem.sigma() / pi * dz2;
  area *= dz2;

  ReflectionRecord rec;
  rec.k = k;
  rec.R = std::conj(rbar);
  rec.method = Method::Numeric;
  rec.error_estimate = 2.0 / pi * std::sqrt(area) * cgo.residual_norm;
  rec.time = 0.0;
  return rec;
}

ReflectionRecord reflection_numeric_richardson(const DiracProblem& problem,
                                               double tol, int max_terms) {
  const CgoSolution fine = solve_cgo(problem, tol, max_terms);
  ReflectionRecord rec = reflection_numeric(problem, fine);

  const int n_half = problem.n() / 2;
  DiracProblem coarse =
      problem.potential_mode() == PotentialMode::Indicator
          ? DiracProblem::make(problem.curve(), problem.k(), problem.sigma(),
                               n_half, problem.box_half_width())
          : throw std::invalid_argument(
                "reflection_numeric_richardson: sampled potentials not supported");
  const CgoSolution cs = solve_cgo(coarse, tol, max_terms);
  const ReflectionRecord rc = reflection_numeric(coarse, cs);
  rec.error_estimate = std::abs(rec.R - rc.R);
  return rec;
}

ReflectionRecord evolve_reflection(const ReflectionRecord& record, double t) {
  if (record.time != 0.0)
    throw std::invalid_argument("evolve_reflection: record already evolved (time != 0)");
  ReflectionRecord out = record;
  out.R = record.R * std::polar(1.0, 4.0 * t * std::real(record.k * record.k));
  out.time = t;
  return out;
}

std::string reflection_csv_header() {
  return "k_re,k_im,R_re,R_im,method,error_estimate,time";
}

std::string to_csv_row(const ReflectionRecord& r) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%s,%.17g,%.17g",
                r.k.real(), r.k.imag(), r.R.real(), r.R.imag(),
                r.method_label().c_str(), r.error_estimate, r.time);
  return buf;
}

ReflectionRecord from_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') { fields.push_back(cur); cur.clear(); }
    else cur.push_back(c);
  }
  fields.push_back(cur);
  if (fields.size() != 7)
    throw std::invalid_argument("reflection CSV row: expected 7 fields, got " +
                                std::to_string(fields.size()));
  auto num = [&](int i) {
    size_t pos = 0;
    const double v = std::stod(fields[i], &pos);
    if (pos != fields[i].size())
      throw std::invalid_argument("reflection CSV row: bad number '" + fields[i] + "'");
    return v;
  };
  ReflectionRecord r;
  r.k = {num(0), num(1)};
  r.R = {num(2), num(3)};
  r.method = method_from_string(fields[4]);
  if (fields[4].rfind("hybrid:", 0) == 0)
    r.hybrid_delegate = method_from_string(fields[4].substr(7));
  r.error_estimate = num(5);
  r.time = num(6);
  return r;
}

}  // namespace dsii
