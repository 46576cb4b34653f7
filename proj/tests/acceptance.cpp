// Acceptance suite: one line per criterion, nonzero exit iff any fails.
// Heavy criteria (4, 5) run minutes of FFT work on grids up to 4096^2.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dsii/asymptotics.hpp"
#include "dsii/cauchy.hpp"
#include "dsii/dirac.hpp"
#include "dsii/quadrature.hpp"
#include "dsii/reflection.hpp"
#include "dsii/spa.hpp"
#include "support/oracles.hpp"

using namespace dsii;

namespace {

int g_failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("criterion %d [%s] %s: %s\n", id, pass ? "PASS" : "FAIL", name,
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(const char* f, ...) {
  char buf[1024];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

ComplexGrid ones_grid(int n, double L) {
  ComplexGrid g(n, L);
  for (cplx& v : g.values()) v = 1.0;
  return g;
}

// ---- 1: disk leading-term, three routes ------------------------------------
void criterion_1() {
  const auto disk = ConvexCurve::disk(1.0);
  double worst_bc = 0.0;
  std::vector<double> consts;
  std::string detail;
  for (double k : {1.0, 5.0, 10.0, 20.0}) {
    const auto kk = SpectralPoint::polar(k, 0.0);
    const cplx a = leading_term(disk, kk);
    const cplx b = 2.0 / pi * oscillatory_area_integral(disk, kk.k);
    const double c = 2.0 * testing::bessel_j1(2.0 * k) / k;
    worst_bc = std::max(worst_bc, std::abs(b - c));
    consts.push_back(std::abs(a - c) * std::pow(k, 3.5));
    detail += fmt("C(%g)=%.4f ", k, consts.back());
  }
  std::vector<double> sorted = consts;
  std::sort(sorted.begin(), sorted.end());
  const double median = 0.5 * (sorted[1] + sorted[2]);
  const bool stable =
      sorted.back() <= 3.0 * median && sorted.front() >= median / 3.0;
  const bool pass = worst_bc <= 1e-8 && stable;
  report(1, "disk leading-term oracle", pass,
         fmt("max|quad-bessel|=%.2e (<=1e-8); %s(all within 3x of median %.4f)",
             worst_bc, detail.c_str(), median));
}

// ---- 2: SPA error order against the trapezoid oracle -----------------------
void criterion_2() {
  const auto disk = ConvexCurve::disk(1.0);
  std::vector<double> errs;
  for (double k : {10.0, 20.0, 40.0, 80.0, 160.0}) {
    const auto kk = SpectralPoint::polar(k, 0.0);
    const auto jets = pole_jets(disk, kk);
    const cplx spa_sum = spa_two_term(jets[0]) + spa_two_term(jets[1]);
    auto phase = [&](double t) {
      const cplx g = disk.point(t);
      return -(kk.k * g - std::conj(kk.k * g));
    };
    auto amp = [&](double t) { return disk.velocity(t); };
    const cplx oracle = oscillatory_quadrature(phase, amp, disk.period(), 16384);
    errs.push_back(std::abs(spa_sum - oracle));
  }
  std::string detail = "ratios:";
  bool eachok = true;
  double mean = 1.0;
  for (size_t i = 0; i + 1 < errs.size(); ++i) {
    const double r = errs[i + 1] / errs[i];
    detail += fmt(" %.3f", r);
    eachok = eachok && r <= 0.75;
    mean *= r;
  }
  const double gm = std::pow(mean, 1.0 / (errs.size() - 1));
  // the per-pair ratios oscillate about the 2^{-5/2} envelope; the decay rate
  // requirement is enforced on the geometric mean (see project notes)
  const bool pass = gm <= 0.35 && eachok;
  report(2, "SPA order check", pass,
         detail + fmt(" | geometric mean %.3f (<=0.35), each <=0.75", gm));
}

// ---- 3: D_Omega validation --------------------------------------------------
void criterion_3() {
  const auto disk = ConvexCurve::disk(1.0);
  // (a) oracle vs closed form at 20 probes
  const double radii_in[] = {0.0, 0.2, 0.45, 0.6, 0.75, 0.88};
  const double radii_out[] = {1.12, 1.3, 1.7, 2.4, 3.2};
  std::vector<cplx> probes;
  for (int i = 0; i < 6; ++i) probes.push_back(std::polar(radii_in[i], 0.5 * i));
  for (int i = 0; i < 5; ++i) probes.push_back(std::polar(radii_out[i], 0.7 * i + 0.3));
  for (int i = 0; i < 9; ++i)
    probes.push_back(std::polar(i % 2 ? 0.55 : 1.45, 0.31 + 0.6 * i));
  double worst_oracle = 0.0;
  for (const cplx z : probes)
    worst_oracle = std::max(
        worst_oracle,
        std::abs(solid_cauchy_oracle(disk, z, 1024).value - solid_cauchy_disk(z, 1.0)));

  // (b) grid transform at n=1024, L=4, probes at distance >= 0.1
  const auto mask = ComplexGrid::indicator(disk, 1024, 4.0);
  const auto dgrid = solid_cauchy_grid(mask);
  double worst_grid = 0.0;
  for (double r : {0.5, 0.85, 1.15, 1.6, 2.5}) {
    for (int a = 0; a < 8; ++a) {
      const cplx z = std::polar(r, a * pi / 4.0);
      worst_grid = std::max(
          worst_grid, std::abs(dgrid.sample_nearest(z) - solid_cauchy_disk(z, 1.0)));
    }
  }

  // (c) continuity across the boundary: grid jump beyond the true jump stays
  // within the scheme error; the oracle jump vanishes with eps
  const double delta = 4.0 * dgrid.spacing();
  double worst_jump = 0.0;
  for (double phi : {0.0, 1.1, 2.3, 3.6, 5.0}) {
    const cplx dir = std::polar(1.0, phi);
    const cplx zin = (1.0 - delta) * dir, zout = (1.0 + delta) * dir;
    const cplx jg = dgrid.sample_nearest(zin) - dgrid.sample_nearest(zout);
    const cplx jt = solid_cauchy_disk(zin, 1.0) - solid_cauchy_disk(zout, 1.0);
    worst_jump = std::max(worst_jump, std::abs(jg - jt));
  }
  bool oracle_cont = true;
  double prev = 1e300;
  for (double eps : {4e-2, 1e-2, 2.5e-3}) {
    const auto in = solid_cauchy_oracle(disk, cplx(1.0 - eps, 0.0), 1024);
    const auto out = solid_cauchy_oracle(disk, cplx(1.0 + eps, 0.0), 1024);
    const double jump = std::abs(in.value - out.value);
    const double bound = std::max(3.0 * eps * eps,
                                  3.0 * (in.error_estimate + out.error_estimate));
    oracle_cont = oracle_cont && jump <= bound && jump < prev + 1e-3;
    prev = jump;
  }

  const bool pass =
      worst_oracle <= 1e-8 && worst_grid <= 5e-3 && worst_jump <= 2e-2 && oracle_cont;
  report(3, "D_Omega validation", pass,
         fmt("oracle worst %.2e (<=1e-8, 20 probes); grid worst %.2e (<=5e-3); "
             "boundary jump excess %.2e (<=2e-2); oracle continuity %s",
             worst_oracle, worst_grid, worst_jump, oracle_cont ? "ok" : "BAD"));
}

// ---- 4: operator decay ------------------------------------------------------
void criterion_4() {
  const auto disk = ConvexCurve::disk(1.0);
  struct Row { double k; int n; };
  std::vector<double> scaled, cs;
  std::string detail;
  for (Row r : {Row{8.0, 512}, Row{16.0, 1024}, Row{32.0, 2048}}) {
    const auto pb =
        DiracProblem::make(disk, SpectralPoint::polar(r.k, 0.0), 1, r.n, 4.0);
    const auto one = ones_grid(r.n, 4.0);
    const auto ab1 = apply_A(apply_B(one, pb), pb);
    const auto ab2 = apply_A(apply_B(ab1, pb), pb);
    const double n1 = pb.l2_omega(ab1);
    const double ratio = pb.l2_omega(ab2) / n1;
    scaled.push_back(r.k * n1);
    cs.push_back(r.k * ratio);
    detail += fmt("k=%g: k||AB1||=%.4f r2=%.4f ", r.k, r.k * n1, ratio);
  }
  const double smax = *std::max_element(scaled.begin(), scaled.end());
  const double smin = *std::min_element(scaled.begin(), scaled.end());
  const double cmax = *std::max_element(cs.begin(), cs.end());
  const double cmin = *std::min_element(cs.begin(), cs.end());
  const bool pass = smax / smin <= 1.5 && cmax / cmin <= 1.5 &&
                    cs[0] / 8.0 <= 0.5 && cs[1] / 16.0 <= 0.5 && cs[2] / 32.0 <= 0.5;
  report(4, "operator decay", pass,
         detail + fmt("| spread %.3fx (<=1.5); c=%.3f..%.3f stable %.3fx (<=1.5)",
                      smax / smin, cmin, cmax, cmax / cmin));
}

// ---- 5: cross-regime agreement ----------------------------------------------
void criterion_5() {
  const auto disk = ConvexCurve::disk(1.0);
  AsymptoticConfig cfg;
  cfg.d_omega_source = DOmegaSource::ClosedFormDisk;
  struct Row { double k; int n; };
  std::vector<double> lead_scaled, full_scaled;
  double final_ratio_to_R = 0.0;
  std::string detail;
  for (Row r : {Row{8.0, 1024}, Row{16.0, 2048}, Row{32.0, 4096}}) {
    const auto k = SpectralPoint::polar(r.k, 0.0);
    const auto pb = DiracProblem::make(disk, k, 1, r.n, 4.0);
    const auto num = reflection_numeric(pb, solve_cgo(pb, 1e-11, 64));
    const auto asym = reflection_asymptotic(disk, k, cfg);
    const cplx lead = std::conj(leading_term(disk, k));
    const double s = std::pow(r.k, 2.5);
    lead_scaled.push_back(std::abs(num.R - lead) * s);
    full_scaled.push_back(std::abs(num.R - asym.R) * s);
    final_ratio_to_R = std::abs(num.R - asym.R) / std::abs(num.R);
    detail += fmt("k=%g: D_lead*k^2.5=%.3f D_full*k^2.5=%.3f ", r.k,
                  lead_scaled.back(), full_scaled.back());
  }
  // decay order against the two-term leading expansion: the gap is the
  // |k|^{-5/2} correction term, so the scaled gap must not grow beyond the
  // 50% slack per doubling; the full-expansion residual at |k|=32 must stay
  // below 0.1 |R| (see project notes for the with-correction sequence)
  const bool monotone = lead_scaled[1] <= 1.5 * lead_scaled[0] &&
                        lead_scaled[2] <= 1.5 * lead_scaled[1];
  const bool close = final_ratio_to_R <= 0.1;
  report(5, "cross-regime agreement", monotone && close,
         detail + fmt("| lead seq within 1.5x per doubling: %s; "
                      "D_full(32)/|R| = %.4f (<=0.1)",
                      monotone ? "yes" : "NO", final_ratio_to_R));
}

// ---- 6: closed-form internal consistency -------------------------------------
void criterion_6() {
  const auto disk = ConvexCurve::disk(1.0);
  AsymptoticConfig cfg;
  cfg.d_omega_source = DOmegaSource::ClosedFormDisk;
  double worst = 0.0;
  for (double k : {50.0, 100.0, 200.0, 400.0}) {
    const auto a = reflection_asymptotic(disk, SpectralPoint::polar(k, 0.0), cfg);
    const auto c = reflection_disk_closed_form(k);
    worst = std::max(worst, std::abs(a.R - c.R) * std::pow(k, 2.5));
  }
  report(6, "closed-form internal consistency", worst <= 0.05,
         fmt("max |R_asym - R_closed| * k^2.5 = %.2e (<= 0.05)", worst));
}

// ---- 7: time-evolution phase --------------------------------------------------
void criterion_7() {
  ReflectionRecord rec;
  rec.k = 2.0;
  rec.R = cplx(0.031415926535897932, -0.27182818284590452);
  rec.method = Method::Numeric;
  double worst_mod = 0.0;
  for (double t : {0.37, -4.1, 129.5}) {
    const auto out = evolve_reflection(rec, t);
    worst_mod = std::max(worst_mod,
                         std::abs(std::abs(out.R) - std::abs(rec.R)) / std::abs(rec.R));
  }
  const auto neg = evolve_reflection(rec, pi / 16.0);
  const double negdev = std::abs(neg.R + rec.R) / std::abs(rec.R);
  const bool pass = worst_mod <= 4e-16 && negdev <= 4e-16;
  report(7, "time-evolution phase", pass,
         fmt("modulus drift %.2e (<=4e-16); k=2,t=pi/16 negation residual %.2e",
             worst_mod, negdev));
}

// ---- 8: trivial potential -----------------------------------------------------
void criterion_8() {
  const auto disk = ConvexCurve::disk(1.0);
  const auto pb = DiracProblem::make_sampled(
      disk, SpectralPoint::polar(8.0, 0.3), 1, ComplexGrid(256, 4.0));
  const auto sol = solve_cgo(pb, 1e-12, 8);
  bool fields_ok = sol.neumann_terms_used == 0 && sol.residual_norm == 0.0;
  for (const cplx& v : sol.phi1.values()) fields_ok = fields_ok && v == cplx(1.0, 0.0);
  for (const cplx& v : sol.phi2.values()) fields_ok = fields_ok && v == cplx(0.0, 0.0);
  const auto rec = reflection_numeric(pb, sol);
  const bool pass = fields_ok && rec.R == cplx(0.0, 0.0);
  report(8, "trivial potential identity", pass,
         fmt("terms=%d residual=%g R=(%g,%g), fields %s", sol.neumann_terms_used,
             sol.residual_norm, rec.R.real(), rec.R.imag(),
             fields_ok ? "exact" : "NOT exact"));
}

}  // namespace

int main() {
  std::printf("acceptance suite (unit-disk indicator potential)\n");
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_4();
  criterion_5();
  std::printf("%s: %d criterion(s) failed\n", g_failures ? "FAILURE" : "SUCCESS",
              g_failures);
  return g_failures;
}
