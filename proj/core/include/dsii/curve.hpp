#pragma once

#include <array>
#include <utility>
#include <vector>

#include "dsii/types.hpp"

namespace dsii {

enum class CurveKind { Disk, Ellipse, Fourier };

/// Smooth, strictly convex, positively oriented closed boundary curve,
/// parametrized over [0, 2pi) and evaluable with derivatives up to order 4.
///
/// Built-in modes: disk(r) with gamma(t) = r e^{it}, ellipse(a,b) with
/// gamma(t) = a cos t + i b sin t, and trigonometric series
/// gamma(t) = sum_n c_n e^{int}. Fourier curves are validated for strict
/// convexity and regularity at construction (1024 curvature samples).
class ConvexCurve {
 public:
  static ConvexCurve disk(double radius);
  static ConvexCurve ellipse(double semi_axis_a, double semi_axis_b);
  /// coeffs: (n, c_n) pairs, |n| bounded; missing modes are zero.
  static ConvexCurve fourier(const std::vector<std::pair<int, cplx>>& coeffs);

  CurveKind kind() const { return kind_; }
  double period() const { return 2.0 * pi; }

  /// gamma(t), gamma'(t), ..., gamma^{(order)}(t); order in 0..4.
  std::array<cplx, 5> eval(double t, int order) const;
  cplx point(double t) const { return eval(t, 0)[0]; }
  cplx velocity(double t) const { return eval(t, 1)[1]; }

  /// Signed curvature Im(conj(gamma') gamma'') / |gamma'|^3 (> 0 throughout).
  double curvature(double t) const;

  /// True iff z lies in the closed region bounded by the curve; points within
  /// 1e-12 of the boundary count as inside.
  bool contains(cplx z) const;

  /// Enclosed area.
  double area() const;

  /// max_t |gamma(t)|; used to size computational boxes.
  double circumradius() const;

  /// Disk accessors (throw for other kinds).
  double disk_radius() const;
  double ellipse_a() const;
  double ellipse_b() const;
  const std::vector<std::pair<int, cplx>>& fourier_coeffs() const {
    return coeffs_;
  }

 private:
  ConvexCurve() = default;
  void validate_shape() const;
  double star_angle_to_param(double phi) const;

  CurveKind kind_ = CurveKind::Disk;
  double a_ = 1.0;  // disk radius / ellipse semi-axis a
  double b_ = 1.0;  // ellipse semi-axis b
  std::vector<std::pair<int, cplx>> coeffs_;
  cplx star_center_ = 0.0;  // mean boundary point, interior by convexity
  double circumradius_ = 1.0;
};

/// Parameter values and locations of the two boundary points where the phase
/// t -> Im(k gamma(t)) is stationary. w_plus is the pole whose interior normal
/// is a positive multiple of omega = 2i conj(k)/|k| (c_plus > 0), w_minus the
/// one with a negative multiple.
struct PolePair {
  double t_plus;
  double t_minus;
  cplx w_plus;
  cplx w_minus;
  double c_plus;   // interior-normal multiple at w_plus (> 0)
  double c_minus;  // interior-normal multiple at w_minus (< 0)
};

/// Locates both zeros of g(t) = Im(k gamma'(t))/|k| on one period by a
/// 256-point sign-change scan followed by safeguarded Newton iteration.
/// Throws if the curve exhibits more than two sign changes (not strictly
/// convex) or if the iteration fails to converge.
PolePair find_poles(const ConvexCurve& curve, const SpectralPoint& k);

}  // namespace dsii
