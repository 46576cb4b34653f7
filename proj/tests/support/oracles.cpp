#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace dsii::testing {

double bessel_j1(double x) {
  if (x < 0.0) return -bessel_j1(-x);
  if (x <= 16.0) {
    // sum (-1)^m (x/2)^{2m+1} / (m! (m+1)!)
    const double q = 0.25 * x * x;
    double term = 0.5 * x;
    double sum = term;
    for (int m = 1; m <= 80; ++m) {
      term *= -q / (m * (m + 1.0));
      sum += term;
      if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return sum;
  }
  // Hankel expansion, mu = 4: J1 = sqrt(2/(pi x)) (P cos chi - Q sin chi)
  const double chi = x - 0.75 * pi;
  double P = 1.0, Q = 0.0;
  double term = 1.0;
  double prev = 1e300;
  for (int m = 1; m <= 24; ++m) {
    const double odd = 2.0 * m - 1.0;
    term *= (4.0 - odd * odd) / (m * 8.0 * x);
    if (std::abs(term) > prev) break;  // past optimal truncation
    prev = std::abs(term);
    const int r = m % 4;
    if (r == 1) Q += term;
    else if (r == 2) P -= term;
    else if (r == 3) Q -= term;
    else P += term;
  }
  return std::sqrt(2.0 / (pi * x)) * (P * std::cos(chi) - Q * std::sin(chi));
}

cplx fd_derivative(const std::function<cplx(double)>& f, double t, int m,
                   double h) {
  auto stencil = [&](double hh) -> cplx {
    const cplx f2m = f(t - 2 * hh), f1m = f(t - hh), f0 = f(t),
               f1 = f(t + hh), f2 = f(t + 2 * hh);
    if (m == 1) return (f2m - 8.0 * f1m + 8.0 * f1 - f2) / (12.0 * hh);
    if (m == 2)
      return (-f2m + 16.0 * f1m - 30.0 * f0 + 16.0 * f1 - f2) / (12.0 * hh * hh);
    throw std::invalid_argument("fd_derivative: order must be 1 or 2");
  };
  // one Richardson pass on the O(h^4) stencils
  const cplx a = stencil(h), b = stencil(0.5 * h);
  return (16.0 * b - a) / 15.0;
}

cplx dft_derivative(const std::function<cplx(double)>& f, double t, int m,
                    int samples) {
  std::vector<cplx> v(samples);
  for (int j = 0; j < samples; ++j) v[j] = f(2.0 * pi * j / samples);
  std::vector<cplx> coef(samples);
  double peak = 0.0;
  for (int n = -samples / 2 + 1; n < samples / 2; ++n) {
    cplx cn = 0.0;
    for (int j = 0; j < samples; ++j)
      cn += v[j] * std::polar(1.0, -n * 2.0 * pi * j / samples);
    cn /= static_cast<double>(samples);
    coef[n + samples / 2] = cn;
    peak = std::max(peak, std::abs(cn));
  }
  cplx acc = 0.0;
  for (int n = -samples / 2 + 1; n < samples / 2; ++n) {
    const cplx cn = coef[n + samples / 2];
    // drop empty modes; the n^m factor would amplify their rounding noise
    if (std::abs(cn) < 3e-15 * peak) continue;
    cplx fac = 1.0;
    for (int p = 0; p < m; ++p) fac *= cplx(0.0, n);
    acc += cn * fac * std::polar(1.0, n * t);
  }
  return acc;
}

std::vector<double> bisection_pole_oracle(const ConvexCurve& curve, cplx k) {
  auto g = [&](double t) { return std::imag(k * curve.velocity(t)); };
  std::vector<double> roots;
  const int m = 4096;
  for (int j = 0; j < m; ++j) {
    double lo = 2.0 * pi * j / m, hi = 2.0 * pi * (j + 1) / m;
    if (g(lo) == 0.0) { roots.push_back(lo); continue; }
    if (g(lo) * g(hi) >= 0.0) continue;
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (g(lo) * g(mid) <= 0.0) hi = mid; else lo = mid;
    }
    roots.push_back(0.5 * (lo + hi));
  }
  return roots;
}

ConvexCurve analytic_test_curve(int n_modes) {
  std::vector<std::pair<int, cplx>> coeffs{{1, 1.0}};
  double c = 0.05;
  for (int n = 2; n <= n_modes; ++n) {
    coeffs.emplace_back(n, cplx(c, 0.35 * c));
    c *= 0.3;
  }
  return ConvexCurve::fourier(coeffs);
}

}  // namespace dsii::testing
