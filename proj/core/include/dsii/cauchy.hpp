#pragma once

#include <memory>

#include "dsii/grid.hpp"
#include "dsii/types.hpp"

namespace dsii {

class ConvexCurve;

/// D_Omega for the disk D(0,r): conj(z) for |z| <= r, r^2/z for |z| >= r.
cplx solid_cauchy_disk(cplx z, double radius);

struct QuadResult {
  cplx value;
  double error_estimate;  // |value - coarse value| from a node-doubling pass
};

/// Reference evaluation of D_Omega(z) = (1/pi) integral_Omega (z-w)^{-1} L(dw)
/// by tensor quadrature: Gauss-Legendre in polar coordinates centered at z
/// when z lies in Omega (the Jacobian cancels the singularity), a star-shaped
/// tensor rule otherwise. quad_n >= 64 controls node counts; the result
/// carries a node-doubling error estimate.
QuadResult solid_cauchy_oracle(const ConvexCurve& curve, cplx z, int quad_n);

/// Boundary trace D_Omega(gamma(t0)) via the Stokes-reduced contour integral
/// (1/2 pi i) oint (conj(w) - conj(z0))/(z0 - w) dw, whose integrand is smooth
/// on the curve; trapezoid rule, spectrally accurate for analytic boundaries.
cplx solid_cauchy_boundary(const ConvexCurve& curve, double t0, int quad_n);

/// Sampled kernel of 1/(pi z) on the doubled (zero-padded) grid, held in
/// Fourier space for fast convolution. The origin sample is 0 (the cell
/// average of the odd kernel over a centered square vanishes), which keeps
/// the table odd under z -> -z.
class CauchyKernelTable {
 public:
  CauchyKernelTable(int n, double box_half_width);
  ~CauchyKernelTable();
  CauchyKernelTable(const CauchyKernelTable&) = delete;
  CauchyKernelTable& operator=(const CauchyKernelTable&) = delete;

  int n() const { return n_; }
  double box_half_width() const { return L_; }

  /// Raw (space-domain) kernel sample at table index (p, q), p,q in [0, 2n);
  /// indices >= n alias negative offsets. Exposed for invariant checks.
  cplx kernel_value(int p, int q) const;

  /// Linear convolution (zero-padded) of f with the kernel, times cell area.
  ComplexGrid convolve(const ComplexGrid& f) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int n_;
  double L_;
};

/// Solution of the discrete dbar problem: convolution with 1/(pi z).
/// f must vanish outside the centered box of half-width 3L/4 (margin L/4).
ComplexGrid dbar_inverse_grid(const ComplexGrid& f, const CauchyKernelTable& table);
ComplexGrid dbar_inverse_grid(const ComplexGrid& f);

/// Convolution with 1/(pi conj(z)), the inverse of the holomorphic derivative.
ComplexGrid del_inverse_grid(const ComplexGrid& f, const CauchyKernelTable& table);
ComplexGrid del_inverse_grid(const ComplexGrid& f);

/// D_Omega on the grid from indicator samples (values must be 0 or 1).
ComplexGrid solid_cauchy_grid(const ComplexGrid& mask, const CauchyKernelTable& table);
ComplexGrid solid_cauchy_grid(const ComplexGrid& mask);

}  // namespace dsii
