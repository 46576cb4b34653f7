#pragma once

#include <functional>
#include <vector>

#include "dsii/types.hpp"

namespace dsii {

class ConvexCurve;

/// Gauss-Legendre nodes and weights on [a, b].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
  GaussLegendre(int n, double a, double b);
};

/// Length of the segment from z along direction e^{i theta} to the first
/// boundary crossing (0 if the ray starts outside and never enters... callers
/// pass interior or boundary z, for which the crossing is unique).
double ray_to_boundary(const ConvexCurve& curve, cplx z, double theta);

/// integral_Omega f(w) L(dw) by the star-shaped tensor rule
/// w = c + s (gamma(t) - c): Gauss-Legendre in s, trapezoid in t.
cplx area_integral_star(const ConvexCurve& curve,
                        const std::function<cplx(cplx)>& f, int n_t, int n_s);

/// integral_Omega e^{kz - conj(kz)} L(dz), resolved tensor quadrature.
/// Node counts scale with |k| so the oscillation stays resolved.
cplx oscillatory_area_integral(const ConvexCurve& curve, cplx k);

/// Bessel J_1; the disk leading term is 2 J_1(2|k|)/|k|.
double bessel_j1(double x);

}  // namespace dsii
