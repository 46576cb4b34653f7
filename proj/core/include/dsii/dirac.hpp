#pragma once

#include <memory>
#include <string>

#include "dsii/cauchy.hpp"
#include "dsii/curve.hpp"
#include "dsii/grid.hpp"
#include "dsii/types.hpp"

namespace dsii {

enum class PotentialMode { Indicator, Sampled };

/// One discretized Dirac scattering problem: curve, spectral parameter,
/// sign sigma, and the grid carrying the potential. Construction enforces the
/// sampling rule dz <= pi/(2 |k| * safety) with safety 4, i.e. at least 8
/// samples per oscillation of e^{2i Im(kz)}.
class DiracProblem {
 public:
  static DiracProblem make(const ConvexCurve& curve, const SpectralPoint& k,
                           int sigma, int n, double box_half_width);
  /// Same, with an arbitrary sampled potential supported in the curve.
  static DiracProblem make_sampled(const ConvexCurve& curve,
                                   const SpectralPoint& k, int sigma,
                                   ComplexGrid q);

  /// Smallest admissible grid size for the box and |k| (next power of two).
  static int min_grid_size(double box_half_width, double abs_k);

  const ConvexCurve& curve() const { return curve_; }
  const SpectralPoint& k() const { return k_; }
  int sigma() const { return sigma_; }
  int n() const { return q_->n(); }
  double box_half_width() const { return q_->box_half_width(); }
  PotentialMode potential_mode() const { return mode_; }
  const ComplexGrid& q() const { return *q_; }
  const ComplexGrid& omega_mask() const { return *mask_; }
  const CauchyKernelTable& kernel_table() const { return *table_; }

  /// sigma = -1 is carried but outside the validated regime.
  bool unvalidated_regime() const { return sigma_ < 0; }

  double l2_omega(const ComplexGrid& u) const {
    return l2_norm_masked(u, *mask_);
  }

 private:
  DiracProblem(ConvexCurve curve, SpectralPoint k, int sigma,
               PotentialMode mode, std::shared_ptr<const ComplexGrid> q,
               std::shared_ptr<const ComplexGrid> mask);

  ConvexCurve curve_;
  SpectralPoint k_;
  int sigma_;
  PotentialMode mode_;
  std::shared_ptr<const ComplexGrid> q_;
  std::shared_ptr<const ComplexGrid> mask_;
  std::shared_ptr<const CauchyKernelTable> table_;
};

/// A u(z) = (1/2pi) integral_Omega e^{-kw+conj(kw)} (z-w)^{-1} q(w) u(w) L(dw),
/// realized as a pointwise multiply by q e^{-k.+conj(k.)}/2 followed by the
/// grid inverse of dbar.
ComplexGrid apply_A(const ComplexGrid& u, const DiracProblem& problem);

/// B = sigma conj(A conj(.)), the conjugate-mirror operator.
ComplexGrid apply_B(const ComplexGrid& u, const DiracProblem& problem);

struct CgoSolution {
  ComplexGrid phi1;
  ComplexGrid phi2;
  int neumann_terms_used = 0;
  double residual_norm = 0.0;
  // provenance fingerprint, checked by consumers
  cplx k;
  int sigma = 1;
  int n = 0;
  double box_half_width = 0.0;

  bool matches(const DiracProblem& p) const {
    return k == p.k().k && sigma == p.sigma() && n == p.n() &&
           box_half_width == p.box_half_width();
  }
};

/// Neumann-series solution phi1 = 1 + sum_{v>=1} (AB)^v(1), truncated when the
/// L2(Omega) norm of the last term falls below tol; phi2 = B(phi1). Fails if
/// the term-norm ratio reaches 0.9 (series not contracting; use larger |k| or
/// a finer grid) or if max_terms is exhausted.
CgoSolution solve_cgo(const DiracProblem& problem, double tol, int max_terms);

/// Writes <prefix>.phi1.bin / <prefix>.phi2.bin in the grid binary layout and
/// a <prefix>.json sidecar carrying (k, sigma, n, L, terms, residual).
void save_cgo_solution(const CgoSolution& sol, const std::string& prefix);
CgoSolution load_cgo_solution(const std::string& prefix);

/// ||AB(1)||_{L2(Omega)}; the operator-decay probe.
double ab_norm_probe(const DiracProblem& problem);

}  // namespace dsii
