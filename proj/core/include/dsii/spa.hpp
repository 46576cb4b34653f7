#pragma once

#include <functional>

#include "dsii/types.hpp"

namespace dsii {

/// Which stationary point a jet belongs to. Plus/Minus name the poles whose
/// interior normal is a positive/negative multiple of omega; there
/// Phi'' = -i|Phi''| resp. +i|Phi''|. RealAxis admits phases with
/// Re Phi'' > 0 (the Gaussian sanity mode used by test oracles).
enum class PoleSign { Plus, Minus, RealAxis };

const char* to_string(PoleSign s);

/// Square root of Phi'' on the branch reached as the limit of principal roots
/// from Re > 0. For purely imaginary Phi'' at the poles this is
/// e^{-i pi/4} |Phi''|^{1/2} at Plus and e^{+i pi/4} |Phi''|^{1/2} at Minus;
/// a sign of Im Phi'' inconsistent with the pole tag is an error.
struct BranchedRoot {
  cplx value;  // value^2 == d2Phi
};
BranchedRoot branch_root(cplx d2Phi, PoleSign pole_sign);

/// Phase and amplitude derivatives at one non-degenerate critical point of
/// integral e^{-Phi(t)} a(t) dt.
struct PhaseJet {
  double t0 = 0.0;
  cplx Phi;
  cplx dPhi;  // must vanish to |dPhi| <= 1e-10 |d2Phi|
  cplx d2Phi;
  cplx d3Phi;
  cplx d4Phi;
  cplx a0;  // a(t0)
  cplx a1;  // a'(t0)
  cplx a2;  // a''(t0)
  PoleSign pole_sign = PoleSign::Plus;

  void validate() const;
};

/// Two-term stationary-phase contribution of one critical point:
/// sqrt(2 pi) e^{-Phi} [ a Phi''^{-1/2} + (a''/2) Phi''^{-3/2}
///   - (a Phi''''/8 + a' Phi'''/2) Phi''^{-5/2}
///   + (5/24) a Phi'''^2 Phi''^{-7/2} ],
/// with every fractional power formed from the branch_root value. The full
/// integral is the sum over all critical points.
cplx spa_two_term(const PhaseJet& jet);

/// Trapezoid rule for integral over one period of e^{-Phi(t)} a(t) dt;
/// spectrally accurate for smooth periodic integrands and used as ground
/// truth against spa_two_term. Fails if halving the node count moves the
/// result (under-resolved oscillation).
cplx oscillatory_quadrature(const std::function<cplx(double)>& phase,
                            const std::function<cplx(double)>& amplitude,
                            double period, int quad_n);

}  // namespace dsii
