#include "dsii/curve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dsii {

namespace {
constexpr double kBoundaryTol = 1e-12;
constexpr int kConvexitySamples = 1024;
}  // namespace

ConvexCurve ConvexCurve::disk(double radius) {
  if (!(radius > 0.0))
    throw std::invalid_argument("ConvexCurve::disk: radius must be positive");
  ConvexCurve c;
  c.kind_ = CurveKind::Disk;
  c.a_ = radius;
  c.circumradius_ = radius;
  return c;
}

ConvexCurve ConvexCurve::ellipse(double semi_axis_a, double semi_axis_b) {
  if (!(semi_axis_a > 0.0) || !(semi_axis_b > 0.0))
    throw std::invalid_argument("ConvexCurve::ellipse: semi-axes must be positive");
  ConvexCurve c;
  c.kind_ = CurveKind::Ellipse;
  c.a_ = semi_axis_a;
  c.b_ = semi_axis_b;
  c.circumradius_ = std::max(semi_axis_a, semi_axis_b);
  return c;
}

ConvexCurve ConvexCurve::fourier(const std::vector<std::pair<int, cplx>>& coeffs) {
  ConvexCurve c;
  c.kind_ = CurveKind::Fourier;
  c.coeffs_ = coeffs;
  for (const auto& [n, cn] : coeffs)
    if (n == 0) c.star_center_ += cn;
  double rmax = 0.0;
  for (int j = 0; j < kConvexitySamples; ++j)
    rmax = std::max(rmax, std::abs(c.point(2.0 * pi * j / kConvexitySamples)));
  c.circumradius_ = rmax;
  c.validate_shape();
  return c;
}

void ConvexCurve::validate_shape() const {
  for (int j = 0; j < kConvexitySamples; ++j) {
    const double t = 2.0 * pi * j / kConvexitySamples;
    const auto d = eval(t, 2);
    const double speed = std::abs(d[1]);
    if (!(speed > 0.0))
      throw std::invalid_argument("ConvexCurve: |gamma'(t)| vanishes (irregular parametrization)");
    const double kappa = std::imag(std::conj(d[1]) * d[2]) / (speed * speed * speed);
    if (!(kappa > 0.0)) {
      std::ostringstream msg;
      msg << "ConvexCurve: curvature " << kappa << " at t=" << t
          << " is not positive; curve is not strictly convex";
      throw std::invalid_argument(msg.str());
    }
  }
}

std::array<cplx, 5> ConvexCurve::eval(double t, int order) const {
  if (order < 0 || order > 4)
    throw std::invalid_argument("ConvexCurve::eval: order must be in 0..4");
  std::array<cplx, 5> out{};
  switch (kind_) {
    case CurveKind::Disk: {
      const cplx g = a_ * std::polar(1.0, t);
      cplx f = 1.0;
      for (int m = 0; m <= order; ++m, f *= cplx(0.0, 1.0)) out[m] = f * g;
      break;
    }
    case CurveKind::Ellipse: {
      const cplx g(a_ * std::cos(t), b_ * std::sin(t));
      const cplx gp(-a_ * std::sin(t), b_ * std::cos(t));
      // gamma'' = -gamma, so derivatives cycle with period 4
      const std::array<cplx, 4> cycle{g, gp, -g, -gp};
      for (int m = 0; m <= order; ++m) out[m] = cycle[m % 4];
      break;
    }
    case CurveKind::Fourier: {
      for (const auto& [n, cn] : coeffs_) {
        const cplx e = cn * std::polar(1.0, n * t);
        cplx f = 1.0;
        for (int m = 0; m <= order; ++m, f *= cplx(0.0, n)) out[m] += f * e;
      }
      break;
    }
  }
  return out;
}

double ConvexCurve::curvature(double t) const {
  const auto d = eval(t, 2);
  const double speed = std::abs(d[1]);
  return std::imag(std::conj(d[1]) * d[2]) / (speed * speed * speed);
}

double ConvexCurve::area() const {
  switch (kind_) {
    case CurveKind::Disk:
      return pi * a_ * a_;
    case CurveKind::Ellipse:
      return pi * a_ * b_;
    case CurveKind::Fourier: {
      // (1/2) oint Im(conj(gamma) dgamma) = pi sum n |c_n|^2
      double s = 0.0;
      for (const auto& [n, cn] : coeffs_) s += n * std::norm(cn);
      return pi * s;
    }
  }
  return 0.0;
}

double ConvexCurve::circumradius() const { return circumradius_; }

double ConvexCurve::disk_radius() const {
  if (kind_ != CurveKind::Disk)
    throw std::logic_error("ConvexCurve::disk_radius: not a disk");
  return a_;
}

double ConvexCurve::ellipse_a() const {
  if (kind_ != CurveKind::Ellipse)
    throw std::logic_error("ConvexCurve::ellipse_a: not an ellipse");
  return a_;
}

double ConvexCurve::ellipse_b() const {
  if (kind_ != CurveKind::Ellipse)
    throw std::logic_error("ConvexCurve::ellipse_b: not an ellipse");
  return b_;
}

double ConvexCurve::star_angle_to_param(double phi) const {
  // Invert phi = arg(gamma(t) - center); monotone for convex star-shaped
  // curves. Coarse scan seed, then bisection refined by Newton.
  const int m = 256;
  auto angle = [&](double t) {
    return std::arg(point(t) - star_center_);
  };
  auto wrap = [](double x) {
    while (x > pi) x -= 2.0 * pi;
    while (x < -pi) x += 2.0 * pi;
    return x;
  };
  double best_t = 0.0, best = 1e300;
  for (int j = 0; j < m; ++j) {
    const double t = 2.0 * pi * j / m;
    const double d = std::abs(wrap(angle(t) - phi));
    if (d < best) { best = d; best_t = t; }
  }
  double t = best_t;
  for (int it = 0; it < 60; ++it) {
    const auto d = eval(t, 1);
    const cplx r = d[0] - star_center_;
    const double err = wrap(std::arg(r) - phi);
    if (std::abs(err) < 1e-14) break;
    // d/dt arg(r) = Im(conj(r) r') / |r|^2
    const double slope = std::imag(std::conj(r) * d[1]) / std::norm(r);
    t -= err / slope;
  }
  return t;
}

bool ConvexCurve::contains(cplx z) const {
  switch (kind_) {
    case CurveKind::Disk:
      return std::abs(z) <= a_ + kBoundaryTol;
    case CurveKind::Ellipse: {
      const double x = z.real() / a_, y = z.imag() / b_;
      const double e = x * x + y * y;
      if (e <= 1.0) return true;
      // distance estimate (e - 1)/|grad e| for the thin tolerance band
      const double gx = 2.0 * z.real() / (a_ * a_), gy = 2.0 * z.imag() / (b_ * b_);
      const double g = std::hypot(gx, gy);
      return g > 0.0 && (e - 1.0) / g <= kBoundaryTol;
    }
    case CurveKind::Fourier: {
      const cplx r = z - star_center_;
      const double rho = std::abs(r);
      if (rho < 1e-14) return true;
      const double t = star_angle_to_param(std::arg(r));
      return rho <= std::abs(point(t) - star_center_) + kBoundaryTol;
    }
  }
  return false;
}

PolePair find_poles(const ConvexCurve& curve, const SpectralPoint& k) {
  const double period = curve.period();
  auto g = [&](double t) {
    return std::imag(k.k * curve.velocity(t)) / k.abs_k;
  };
  auto gprime = [&](double t) {
    return std::imag(k.k * curve.eval(t, 2)[2]) / k.abs_k;
  };

  const int m = 256;
  std::vector<double> gv(m + 1);
  for (int j = 0; j <= m; ++j) gv[j] = g(period * j / m);

  struct Bracket { double lo, hi; };
  std::vector<Bracket> brackets;
  for (int j = 0; j < m; ++j) {
    if (gv[j] == 0.0) {
      brackets.push_back({period * j / m, period * j / m});
    } else if (gv[j] * gv[j + 1] < 0.0) {
      brackets.push_back({period * j / m, period * (j + 1) / m});
    }
  }
  if (brackets.size() != 2) {
    std::ostringstream msg;
    msg << "find_poles: expected exactly 2 sign changes of Im(k gamma'), found "
        << brackets.size() << " (curve not strictly convex, or degenerate k)";
    throw std::runtime_error(msg.str());
  }

  auto refine = [&](Bracket br) {
    double lo = br.lo, hi = br.hi;
    double t = 0.5 * (lo + hi);
    double glo = g(lo);
    for (int it = 0; it < 100; ++it) {
      const double gt = g(t);
      const double speed = std::abs(curve.velocity(t));
      if (std::abs(gt) <= 1e-13 * speed) return t;
      if (glo * gt < 0.0) hi = t; else { lo = t; glo = gt; }
      const double step = gt / gprime(t);
      double tn = t - step;
      if (!(tn > lo) || !(tn < hi)) tn = 0.5 * (lo + hi);  // bisection fallback
      t = tn;
    }
    std::ostringstream msg;
    msg << "find_poles: root iteration did not converge in bracket [" << br.lo
        << ", " << br.hi << "], residual " << g(t);
    throw std::runtime_error(msg.str());
  };

  double roots[2] = {refine(brackets[0]), refine(brackets[1])};
  for (double& t : roots) {
    t = std::fmod(t, period);
    if (t < 0.0) t += period;
  }

  // classify: at a root, k gamma' is real and its sign equals the sign of the
  // interior-normal multiple c (and of g' under positive curvature)
  PolePair poles{};
  int seen_plus = 0, seen_minus = 0;
  for (double t : roots) {
    const cplx gp = curve.velocity(t);
    const double kg = std::real(k.k * gp);
    const double c = kg / (2.0 * std::abs(gp) * k.abs_k);
    if (c > 0.0) {
      poles.t_plus = t;
      poles.w_plus = curve.point(t);
      poles.c_plus = c;
      ++seen_plus;
    } else {
      poles.t_minus = t;
      poles.w_minus = curve.point(t);
      poles.c_minus = c;
      ++seen_minus;
    }
  }
  if (seen_plus != 1 || seen_minus != 1)
    throw std::runtime_error("find_poles: pole classification failed (both roots on one side)");
  return poles;
}

}  // namespace dsii
