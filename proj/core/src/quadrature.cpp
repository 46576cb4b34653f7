#include "dsii/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <memory>

#include "dsii/curve.hpp"

namespace dsii {

GaussLegendre::GaussLegendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("GaussLegendre: n must be >= 1");
  std::unique_ptr<gsl_integration_glfixed_table,
                  decltype(&gsl_integration_glfixed_table_free)>
      table(gsl_integration_glfixed_table_alloc(static_cast<size_t>(n)),
            &gsl_integration_glfixed_table_free);
  if (!table) throw std::runtime_error("GaussLegendre: table allocation failed");
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x, w;
    gsl_integration_glfixed_point(a, b, static_cast<size_t>(i), &x, &w,
                                  table.get());
    nodes[i] = x;
    weights[i] = w;
  }
}

double ray_to_boundary(const ConvexCurve& curve, cplx z, double theta) {
  const cplx dir = std::polar(1.0, theta);
  switch (curve.kind()) {
    case CurveKind::Disk: {
      const double r = curve.disk_radius();
      // |z + rho dir|^2 = r^2
      const double b = z.real() * dir.real() + z.imag() * dir.imag();
      const double c = std::norm(z) - r * r;
      const double disc = b * b - c;
      if (disc < 0.0) return 0.0;
      return std::max(0.0, -b + std::sqrt(disc));
    }
    case CurveKind::Ellipse: {
      const double a = curve.ellipse_a(), b = curve.ellipse_b();
      const double cx = dir.real() / a, cy = dir.imag() / b;
      const double zx = z.real() / a, zy = z.imag() / b;
      const double A = cx * cx + cy * cy;
      const double B = zx * cx + zy * cy;
      const double C = zx * zx + zy * zy - 1.0;
      const double disc = B * B - A * C;
      if (disc < 0.0) return 0.0;
      return std::max(0.0, (-B + std::sqrt(disc)) / A);
    }
    case CurveKind::Fourier: {
      // bisection on the membership test
      double lo = 0.0, hi = 2.0 * curve.circumradius() + std::abs(z) + 1.0;
      if (!curve.contains(z)) return 0.0;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (curve.contains(z + mid * dir)) lo = mid; else hi = mid;
        if (hi - lo < 1e-14 * (1.0 + hi)) break;
      }
      return 0.5 * (lo + hi);
    }
  }
  return 0.0;
}

namespace {

cplx star_center(const ConvexCurve& curve) {
  if (curve.kind() == CurveKind::Fourier) {
    cplx c = 0.0;
    for (const auto& [n, cn] : curve.fourier_coeffs())
      if (n == 0) c += cn;
    return c;
  }
  return 0.0;  // built-ins are centered
}

}  // namespace

cplx area_integral_star(const ConvexCurve& curve,
                        const std::function<cplx(cplx)>& f, int n_t, int n_s) {
  const cplx c = star_center(curve);
  const GaussLegendre gs(n_s, 0.0, 1.0);
  cplx acc = 0.0;
  const double dt = curve.period() / n_t;
  for (int j = 0; j < n_t; ++j) {
    const double t = j * dt;
    const auto d = curve.eval(t, 1);
    const cplx r = d[0] - c;
    const double jac_t = std::imag(std::conj(r) * d[1]);
    for (int i = 0; i < n_s; ++i) {
      const double s = gs.nodes[i];
      acc += gs.weights[i] * dt * s * jac_t * f(c + s * r);
    }
  }
  return acc;
}

double bessel_j1(double x) { return std::cyl_bessel_j(1.0, std::abs(x)) * (x < 0 ? -1.0 : 1.0); }

cplx oscillatory_area_integral(const ConvexCurve& curve, cplx k) {
  const double absk = std::abs(k);
  // spatial frequency 2|k| over a region of size ~circumradius
  const double cr = curve.circumradius();
  const int n_t = std::max(256, 16 * static_cast<int>(std::ceil(absk * cr)) + 64);
  const int n_s = std::max(128, 6 * static_cast<int>(std::ceil(absk * cr)) + 32);
  return area_integral_star(
      curve, [&](cplx w) { return tau_plus(k, w); }, n_t, n_s);
}

}  // namespace dsii
