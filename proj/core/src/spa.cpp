#include "dsii/spa.hpp"

#include <cmath>
#include <sstream>

namespace dsii {

namespace {
constexpr double kImagTol = 1e-8;    // |Re Phi''| / |Phi''| admitted at poles
constexpr double kCritTol = 1e-10;   // |Phi'| / |Phi''| admitted in a jet
}  // namespace

const char* to_string(PoleSign s) {
  switch (s) {
    case PoleSign::Plus: return "+";
    case PoleSign::Minus: return "-";
    case PoleSign::RealAxis: return "real";
  }
  return "?";
}

BranchedRoot branch_root(cplx d2Phi, PoleSign pole_sign) {
  const double mag = std::abs(d2Phi);
  if (!(mag > 0.0))
    throw std::runtime_error("branch_root: degenerate critical point (Phi'' = 0)");

  if (pole_sign == PoleSign::RealAxis) {
    if (!(d2Phi.real() > 0.0) || std::abs(d2Phi.imag()) > kImagTol * mag)
      throw std::runtime_error(
          "branch_root: RealAxis mode requires Phi'' on the positive real axis");
    return {std::sqrt(d2Phi.real())};
  }

  if (std::abs(d2Phi.real()) > kImagTol * mag) {
    std::ostringstream msg;
    msg << "branch_root: Phi'' = (" << d2Phi.real() << ", " << d2Phi.imag()
        << ") is not purely imaginary at pole " << to_string(pole_sign);
    throw std::runtime_error(msg.str());
  }
  const double expected = (pole_sign == PoleSign::Plus) ? -1.0 : +1.0;
  if (!(d2Phi.imag() * expected > 0.0)) {
    std::ostringstream msg;
    msg << "branch_root: sign of Im Phi'' = " << d2Phi.imag()
        << " inconsistent with pole " << to_string(pole_sign);
    throw std::runtime_error(msg.str());
  }
  // e^{-i pi/4}|Phi''|^{1/2} at Plus, e^{+i pi/4}|Phi''|^{1/2} at Minus:
  // the principal root of -+ i |Phi''|
  return {std::polar(std::sqrt(mag), expected * pi / 4.0)};
}

void PhaseJet::validate() const {
  const double mag = std::abs(d2Phi);
  if (!(mag > 0.0))
    throw std::runtime_error("PhaseJet: degenerate critical point (Phi'' = 0)");
  if (std::abs(dPhi) > kCritTol * mag) {
    std::ostringstream msg;
    msg << "PhaseJet: |Phi'| = " << std::abs(dPhi)
        << " exceeds the critical-point residual at t0 = " << t0;
    throw std::runtime_error(msg.str());
  }
}

cplx spa_two_term(const PhaseJet& jet) {
  jet.validate();
  const cplx r = branch_root(jet.d2Phi, jet.pole_sign).value;
  const cplx r2 = r * r;
  const cplx inv1 = 1.0 / r;
  const cplx inv3 = inv1 / r2;
  const cplx inv5 = inv3 / r2;
  const cplx inv7 = inv5 / r2;
  const cplx bracket = jet.a0 * inv1 + 0.5 * jet.a2 * inv3 -
                       (jet.a0 * jet.d4Phi / 8.0 + 0.5 * jet.a1 * jet.d3Phi) * inv5 +
                       (5.0 / 24.0) * jet.a0 * jet.d3Phi * jet.d3Phi * inv7;
  return std::sqrt(2.0 * pi) * std::exp(-jet.Phi) * bracket;
}

cplx oscillatory_quadrature(const std::function<cplx(double)>& phase,
                            const std::function<cplx(double)>& amplitude,
                            double period, int quad_n) {
  if (!(period > 0.0))
    throw std::invalid_argument("oscillatory_quadrature: period must be positive");
  if (quad_n < 16 || quad_n % 2 != 0)
    throw std::invalid_argument("oscillatory_quadrature: quad_n must be even and >= 16");

  cplx full = 0.0, half = 0.0;
  double amp_scale = 0.0;
  for (int j = 0; j < quad_n; ++j) {
    const double t = period * j / quad_n;
    const cplx a = amplitude(t);
    const cplx v = std::exp(-phase(t)) * a;
    full += v;
    if (j % 2 == 0) half += v;
    amp_scale += std::abs(a);
  }
  full *= period / quad_n;
  half *= period / (quad_n / 2);
  amp_scale *= period / quad_n;

  if (std::abs(full - half) > 1e-7 * (amp_scale + 1e-300)) {
    std::ostringstream msg;
    msg << "oscillatory_quadrature: node-doubling check failed (" << quad_n
        << " vs " << quad_n / 2 << " nodes differ by " << std::abs(full - half)
        << "); the oscillation is under-resolved";
    throw std::runtime_error(msg.str());
  }
  return full;
}

}  // namespace dsii
