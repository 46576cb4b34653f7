#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>

namespace dsii {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

/// Spectral parameter k together with the derived quantities used throughout:
/// h = 1/|k| and omega = 2i*conj(k)/|k| (always of modulus 2).
struct SpectralPoint {
  cplx k;
  double abs_k;
  double theta;
  double h;
  cplx omega;

  static SpectralPoint from_k(cplx k) {
    const double m = std::abs(k);
    if (!(m > 0.0))
      throw std::invalid_argument("SpectralPoint: k must be nonzero");
    return {k, m, std::arg(k), 1.0 / m, cplx(0.0, 2.0) * std::conj(k) / m};
  }

  static SpectralPoint polar(double abs_k, double theta) {
    if (!(abs_k > 0.0))
      throw std::invalid_argument("SpectralPoint: |k| must be positive");
    return from_k(std::polar(abs_k, theta));
  }
};

/// kz - conj(kz) = 2i Im(kz); the exponent of the oscillatory weights.
inline cplx phase_exponent(cplx k, cplx z) {
  return cplx(0.0, 2.0 * std::imag(k * z));
}

/// e^{kz - conj(kz)}, a pure phase.
inline cplx tau_plus(cplx k, cplx z) {
  return std::polar(1.0, 2.0 * std::imag(k * z));
}

/// e^{-kz + conj(kz)}, the conjugate phase.
inline cplx tau_minus(cplx k, cplx z) {
  return std::polar(1.0, -2.0 * std::imag(k * z));
}

}  // namespace dsii
