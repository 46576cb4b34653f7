#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dsii/types.hpp"

namespace dsii {

class ConvexCurve;

/// Uniform square grid of complex samples over the box [-L, L)^2.
/// Sample (ix, iy) sits at z = (-L + ix*dz) + i(-L + iy*dz) with dz = 2L/n,
/// stored row-major (iy outer, ix inner). n is a power of two >= 16.
class ComplexGrid {
 public:
  ComplexGrid(int n, double box_half_width);

  int n() const { return n_; }
  double box_half_width() const { return L_; }
  double spacing() const { return 2.0 * L_ / n_; }
  double cell_area() const { return spacing() * spacing(); }

  cplx z_at(int ix, int iy) const {
    const double d = spacing();
    return {-L_ + ix * d, -L_ + iy * d};
  }

  cplx& at(int ix, int iy) { return v_[static_cast<size_t>(iy) * n_ + ix]; }
  cplx at(int ix, int iy) const { return v_[static_cast<size_t>(iy) * n_ + ix]; }

  std::vector<cplx>& values() { return v_; }
  const std::vector<cplx>& values() const { return v_; }

  /// Index of the sample nearest to z (throws if z is outside the box).
  std::pair<int, int> nearest_index(cplx z) const;
  cplx sample_nearest(cplx z) const {
    auto [ix, iy] = nearest_index(z);
    return at(ix, iy);
  }

  bool same_layout(const ComplexGrid& o) const {
    return n_ == o.n_ && L_ == o.L_;
  }
  void require_same_layout(const ComplexGrid& o) const;

  /// Indicator samples of the region bounded by the curve (cell-center test).
  static ComplexGrid indicator(const ConvexCurve& curve, int n,
                               double box_half_width);

  /// Flat binary layout: n, L, then row-major re/im pairs, all 64-bit
  /// little-endian floats.
  void write_binary(std::ostream& os) const;
  static ComplexGrid read_binary(std::istream& is);
  void write_binary_file(const std::string& path) const;
  static ComplexGrid read_binary_file(const std::string& path);

  /// Inspection CSV: header x,y,re,im.
  void write_csv(std::ostream& os) const;

 private:
  int n_;
  double L_;
  std::vector<cplx> v_;
};

/// Pointwise l2 norm over the whole box, sqrt(sum |u|^2 dz^2).
double l2_norm(const ComplexGrid& u);

/// sqrt(sum_{mask!=0} |u|^2 dz^2); mask and u must share layout.
double l2_norm_masked(const ComplexGrid& u, const ComplexGrid& mask);

}  // namespace dsii
