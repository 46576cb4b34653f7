#include "dsii/asymptotics.hpp"

#include <cmath>
#include <sstream>

#include "dsii/cauchy.hpp"
#include "dsii/dirac.hpp"

namespace dsii {

namespace {

// remainder constant for the O(|k|^-3 ln|k|) error reports; calibrated on the
// disk against near-converged numeric solves (n = 4096) at |k| in {8,16,32},
// where |R_num - R_asym| * |k|^3 / ln|k| peaked at 0.42, kept with 2x headroom
constexpr double kRemainderConstant = 1.0;

double remainder_estimate(double abs_k) {
  return kRemainderConstant * std::log(std::max(abs_k, 2.0)) /
         (abs_k * abs_k * abs_k);
}

int next_pow2(double x) {
  int n = 16;
  while (n < x) n *= 2;
  return n;
}

}  // namespace

std::string to_string(DOmegaSource s) {
  switch (s) {
    case DOmegaSource::ClosedFormDisk: return "closed_form_disk";
    case DOmegaSource::Oracle: return "oracle";
    case DOmegaSource::Grid: return "grid";
  }
  throw std::logic_error("to_string(DOmegaSource): bad enum value");
}

DOmegaSource d_omega_source_from_string(const std::string& s) {
  if (s == "closed_form_disk") return DOmegaSource::ClosedFormDisk;
  if (s == "oracle") return DOmegaSource::Oracle;
  if (s == "grid") return DOmegaSource::Grid;
  throw std::invalid_argument("unknown d_omega_source: " + s);
}

std::array<PhaseJet, 2> pole_jets(const ConvexCurve& curve, const SpectralPoint& k) {
  const PolePair poles = find_poles(curve, k);
  std::array<PhaseJet, 2> jets;
  const double ts[2] = {poles.t_plus, poles.t_minus};
  const PoleSign signs[2] = {PoleSign::Plus, PoleSign::Minus};
  for (int j = 0; j < 2; ++j) {
    const auto d = curve.eval(ts[j], 4);
    PhaseJet jet;
    jet.t0 = ts[j];
    jet.pole_sign = signs[j];
    // Phi^(m) = -(k gamma^(m) - conj(k gamma^(m))) = -2i Im(k gamma^(m))
    const auto phi = [&](int m) {
      return cplx(0.0, -2.0 * std::imag(k.k * d[m]));
    };
    jet.Phi = phi(0);
    jet.dPhi = phi(1);
    jet.d2Phi = phi(2);
    jet.d3Phi = phi(3);
    jet.d4Phi = phi(4);
    jet.a0 = d[1];
    jet.a1 = d[2];
    jet.a2 = d[3];
    jet.validate();
    jets[j] = jet;
  }
  return jets;
}

cplx d_omega_at_pole(const ConvexCurve& curve, double t, DOmegaSource source) {
  switch (source) {
    case DOmegaSource::ClosedFormDisk: {
      if (curve.kind() != CurveKind::Disk)
        throw std::invalid_argument(
            "d_omega_at_pole: closed_form_disk source needs a disk curve");
      return std::conj(curve.point(t));
    }
    case DOmegaSource::Oracle:
      return solid_cauchy_boundary(curve, t, 2048);
    case DOmegaSource::Grid: {
      // lower-accuracy path: sample the grid transform just inside the
      // boundary, away from the indicator jump
      const int n = 1024;
      const double L = 4.0 * curve.circumradius();
      const ComplexGrid mask = ComplexGrid::indicator(curve, n, L);
      const ComplexGrid d = solid_cauchy_grid(mask);
      const auto der = curve.eval(t, 1);
      const cplx inward = cplx(0.0, 1.0) * der[1] / std::abs(der[1]);
      return d.sample_nearest(der[0] + 2.0 * d.spacing() * inward);
    }
  }
  throw std::logic_error("d_omega_at_pole: bad source");
}

cplx leading_term(const ConvexCurve& curve, const SpectralPoint& k) {
  const auto jets = pole_jets(curve, k);
  const cplx contour = spa_two_term(jets[0]) + spa_two_term(jets[1]);
  return (2.0 / pi) * cplx(0.0, 1.0) / (2.0 * std::conj(k.k)) * contour;
}

cplx correction_term(const ConvexCurve& curve, const SpectralPoint& k,
                     DOmegaSource d_omega_source) {
  const auto jets = pole_jets(curve, k);
  cplx sum = 0.0;
  for (const PhaseJet& jet : jets) {
    const cplx d_omega = d_omega_at_pole(curve, jet.t0, d_omega_source);
    const cplx root = branch_root(jet.d2Phi, jet.pole_sign).value;
    const cplx da = d_omega * jet.a0;
    sum += std::exp(-jet.Phi) / root * (-da + std::conj(da));
  }
  return std::sqrt(2.0 * pi) / (4.0 * pi * cplx(0.0, 1.0) * k.abs_k * k.abs_k) * sum;
}

ReflectionRecord reflection_asymptotic(const ConvexCurve& curve,
                                       const SpectralPoint& k,
                                       const AsymptoticConfig& config) {
  if (k.abs_k < 1.0)
    throw std::invalid_argument(
        "reflection_asymptotic: poles are not resolvable below |k| = 1");
  cplx rbar = leading_term(curve, k);
  if (config.include_correction)
    rbar += correction_term(curve, k, config.d_omega_source);

  ReflectionRecord rec;
  rec.k = k.k;
  rec.R = std::conj(rbar);
  rec.method = config.include_correction ? Method::AsymptoticFull
                                         : Method::AsymptoticSpa;
  rec.error_estimate = remainder_estimate(k.abs_k);
  rec.time = 0.0;
  return rec;
}

ReflectionRecord reflection_disk_closed_form(double abs_k) {
  if (!(abs_k > 0.0))
    throw std::invalid_argument("reflection_disk_closed_form: |k| must be positive");
  const double arg = 2.0 * abs_k - pi / 4.0;
  const double value = 2.0 / std::sqrt(pi * abs_k * abs_k * abs_k) *
                       (std::sin(arg) - 5.0 / (16.0 * abs_k) * std::cos(arg));
  ReflectionRecord rec;
  rec.k = abs_k;
  rec.R = value;
  rec.method = Method::ClosedFormDisk;
  rec.error_estimate = remainder_estimate(abs_k);
  rec.time = 0.0;
  return rec;
}

double NumericBackend::resolved_box(const ConvexCurve& curve) const {
  return box_half_width > 0.0 ? box_half_width : 4.0 * curve.circumradius();
}

int NumericBackend::grid_size_for(const ConvexCurve& curve, double abs_k) const {
  if (points_per_wavelength < 8.0)
    throw std::invalid_argument(
        "NumericBackend: points_per_wavelength must be >= 8");
  const double L = resolved_box(curve);
  const int n = next_pow2(2.0 * L * points_per_wavelength * abs_k / pi);
  if (n > grid_budget) {
    const double feasible = grid_budget * pi / (2.0 * L * points_per_wavelength);
    std::ostringstream msg;
    msg << "numeric backend infeasible: |k|=" << abs_k << " needs n=" << n
        << " > budget " << grid_budget
        << "; largest feasible |k| is " << feasible
        << " (lower k_threshold to at most that value)";
    throw std::runtime_error(msg.str());
  }
  return n;
}

HybridResult reflection_hybrid(const ConvexCurve& curve, const SpectralPoint& k,
                               const AsymptoticConfig& config,
                               const NumericBackend& backend) {
  if (!(config.k_threshold > 0.0))
    throw std::invalid_argument("reflection_hybrid: k_threshold must be positive");
  auto run_numeric = [&]() {
    const int n = backend.grid_size_for(curve, k.abs_k);
    const DiracProblem problem = DiracProblem::make(
        curve, k, backend.sigma, n, backend.resolved_box(curve));
    if (backend.richardson)
      return reflection_numeric_richardson(problem, backend.tol, backend.max_terms);
    return reflection_numeric(problem, solve_cgo(problem, backend.tol, backend.max_terms));
  };

  HybridResult result;
  if (k.abs_k < config.k_threshold) {
    ReflectionRecord rec = run_numeric();
    rec.hybrid_delegate = rec.method;
    rec.method = Method::Hybrid;
    result.record = rec;
    return result;
  }

  ReflectionRecord rec = reflection_asymptotic(curve, k, config);
  if (k.abs_k == config.k_threshold) {
    const ReflectionRecord numeric = run_numeric();
    result.cross_check_discrepancy = std::abs(numeric.R - rec.R);
    rec.error_estimate = std::max(rec.error_estimate, *result.cross_check_discrepancy);
  }
  rec.hybrid_delegate = rec.method;
  rec.method = Method::Hybrid;
  result.record = rec;
  return result;
}

}  // namespace dsii
