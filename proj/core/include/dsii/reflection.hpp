#pragma once

#include <optional>
#include <string>

#include "dsii/dirac.hpp"
#include "dsii/types.hpp"

namespace dsii {

enum class Method { Numeric, AsymptoticFull, AsymptoticSpa, ClosedFormDisk, Hybrid };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

/// Reflection coefficient R(k) with provenance and an error estimate.
/// R is stored unconjugated; the defining integral produces conj(R) and the
/// single conjugation point lives in the producing operation.
struct ReflectionRecord {
  cplx k;
  cplx R;
  Method method = Method::Numeric;
  std::optional<Method> hybrid_delegate;  // set only for Method::Hybrid
  double error_estimate = 0.0;
  double time = 0.0;

  std::string method_label() const;
};

/// conj(R) = (2 sigma/pi) sum_grid e^{kz-conj(kz)} conj(q) phi1 dz^2.
/// The error estimate is the residual-based bound (2/pi) sqrt(area) * residual;
/// for a two-grid Richardson estimate see reflection_numeric_richardson.
ReflectionRecord reflection_numeric(const DiracProblem& problem,
                                    const CgoSolution& cgo);

/// Solves at n and n/2 and uses the difference of the two reflection values
/// as the error estimate (n/2 must itself satisfy the sampling rule).
ReflectionRecord reflection_numeric_richardson(const DiracProblem& problem,
                                               double tol, int max_terms);

/// R(k;t) = R(k;0) e^{4 i t Re(k^2)}; requires record.time == 0.
ReflectionRecord evolve_reflection(const ReflectionRecord& record, double t);

/// CSV row schema: k_re,k_im,R_re,R_im,method,error_estimate,time
/// (17 significant digits, deterministic formatting).
std::string reflection_csv_header();
std::string to_csv_row(const ReflectionRecord& record);
ReflectionRecord from_csv_row(const std::string& line);

}  // namespace dsii
