#pragma once

#include <array>
#include <optional>

#include "dsii/curve.hpp"
#include "dsii/reflection.hpp"
#include "dsii/spa.hpp"
#include "dsii/types.hpp"

namespace dsii {

enum class DOmegaSource { ClosedFormDisk, Oracle, Grid };

std::string to_string(DOmegaSource s);
DOmegaSource d_omega_source_from_string(const std::string& s);

struct AsymptoticConfig {
  double k_threshold = 50.0;  // hybrid switch point
  bool include_correction = true;
  DOmegaSource d_omega_source = DOmegaSource::Oracle;
};

/// Phase/amplitude jets at the two poles for Phi(t) = -(k gamma - conj(k gamma)),
/// a(t) = gamma'(t); element 0 is the Plus pole, element 1 the Minus pole.
std::array<PhaseJet, 2> pole_jets(const ConvexCurve& curve, const SpectralPoint& k);

/// D_Omega evaluated at a boundary point gamma(t) through the chosen source.
cplx d_omega_at_pole(const ConvexCurve& curve, double t, DOmegaSource source);

/// First term of conj(R): (2/pi)(i/(2 conj(k))) oint e^{kz-conj(kz)} dz,
/// evaluated as the two-pole stationary-phase sum carried to two terms
/// (both the |k|^{-3/2} and |k|^{-5/2} contributions).
cplx leading_term(const ConvexCurve& curve, const SpectralPoint& k);

/// The O(|k|^{-5/2}) boundary-trace correction
/// sqrt(2pi)/(4 pi i |k|^2) sum_poles e^{-Phi} Phi''^{-1/2}
///   (-D_Omega(gamma(t)) a(t) + conj(D_Omega(gamma(t)) a(t))).
cplx correction_term(const ConvexCurve& curve, const SpectralPoint& k,
                     DOmegaSource d_omega_source);

/// conj(R) = leading_term + correction_term (when enabled); requires |k| >= 1.
ReflectionRecord reflection_asymptotic(const ConvexCurve& curve,
                                       const SpectralPoint& k,
                                       const AsymptoticConfig& config);

/// R = (2/sqrt(pi |k|^3)) [ sin(2|k| - pi/4) - (5/(16|k|)) cos(2|k| - pi/4) ]
/// for the unit-disk indicator potential.
ReflectionRecord reflection_disk_closed_form(double abs_k);

/// Grid sizing and solver knobs for the numeric side of the hybrid evaluator.
struct NumericBackend {
  int sigma = 1;
  double box_half_width = 0.0;  // <= 0 means 4x circumradius
  int grid_budget = 2048;       // hard cap on n
  double points_per_wavelength = 16.0;
  double tol = 1e-10;
  int max_terms = 64;
  bool richardson = false;

  double resolved_box(const ConvexCurve& curve) const;
  /// Smallest power-of-two n resolving |k|; throws if it exceeds the budget.
  int grid_size_for(const ConvexCurve& curve, double abs_k) const;
};

struct HybridResult {
  ReflectionRecord record;
  /// |R_numeric - R_asymptotic|, filled when |k| sits exactly at the threshold.
  std::optional<double> cross_check_discrepancy;
};

/// Numeric evaluation below config.k_threshold, asymptotic at/above; at the
/// threshold both run and the discrepancy is reported.
HybridResult reflection_hybrid(const ConvexCurve& curve, const SpectralPoint& k,
                               const AsymptoticConfig& config,
                               const NumericBackend& backend);

}  // namespace dsii
