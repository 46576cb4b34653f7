#include "dsii/dirac.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dsii {

namespace {
constexpr double kNyquistSafety = 4.0;
constexpr double kDivergenceRatio = 0.9;
}  // namespace

int DiracProblem::min_grid_size(double box_half_width, double abs_k) {
  const double dz_max = pi / (2.0 * abs_k * kNyquistSafety);
  int n = 16;
  while (2.0 * box_half_width / n > dz_max) {
    n *= 2;
    if (n > (1 << 22))
      throw std::invalid_argument("DiracProblem: |k| too large for any sane grid");
  }
  return n;
}

DiracProblem::DiracProblem(ConvexCurve curve, SpectralPoint k, int sigma,
                           PotentialMode mode,
                           std::shared_ptr<const ComplexGrid> q,
                           std::shared_ptr<const ComplexGrid> mask)
    : curve_(std::move(curve)),
      k_(k),
      sigma_(sigma),
      mode_(mode),
      q_(std::move(q)),
      mask_(std::move(mask)) {
  if (sigma_ != 1 && sigma_ != -1)
    throw std::invalid_argument("DiracProblem: sigma must be +1 or -1");
  const double dz = q_->spacing();
  const double dz_max = pi / (2.0 * k_.abs_k * kNyquistSafety);
  if (dz > dz_max) {
    std::ostringstream msg;
    msg << "DiracProblem: grid spacing " << dz
        << " violates the sampling rule dz <= " << dz_max << " at |k|=" << k_.abs_k
        << "; need n >= " << min_grid_size(q_->box_half_width(), k_.abs_k);
    throw std::invalid_argument(msg.str());
  }
  table_ = std::make_shared<CauchyKernelTable>(q_->n(), q_->box_half_width());
}

DiracProblem DiracProblem::make(const ConvexCurve& curve, const SpectralPoint& k,
                                int sigma, int n, double box_half_width) {
  auto mask = std::make_shared<ComplexGrid>(
      ComplexGrid::indicator(curve, n, box_half_width));
  return DiracProblem(curve, k, sigma, PotentialMode::Indicator, mask, mask);
}

DiracProblem DiracProblem::make_sampled(const ConvexCurve& curve,
                                        const SpectralPoint& k, int sigma,
                                        ComplexGrid q) {
  auto mask = std::make_shared<ComplexGrid>(
      ComplexGrid::indicator(curve, q.n(), q.box_half_width()));
  auto qp = std::make_shared<ComplexGrid>(std::move(q));
  return DiracProblem(curve, k, sigma, PotentialMode::Sampled, qp, mask);
}

ComplexGrid apply_A(const ComplexGrid& u, const DiracProblem& problem) {
  u.require_same_layout(problem.q());
  const int n = u.n();
  ComplexGrid g(n, u.box_half_width());
  const cplx k = problem.k().k;
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      const cplx qv = problem.q().at(ix, iy);
      if (qv == cplx(0.0, 0.0)) continue;
      g.at(ix, iy) = 0.5 * qv * tau_minus(k, g.z_at(ix, iy)) * u.at(ix, iy);
    }
  return dbar_inverse_grid(g, problem.kernel_table());
}

ComplexGrid apply_B(const ComplexGrid& u, const DiracProblem& problem) {
  ComplexGrid uc(u.n(), u.box_half_width());
  for (size_t i = 0; i < u.values().size(); ++i)
    uc.values()[i] = std::conj(u.values()[i]);
  ComplexGrid out = apply_A(uc, problem);
  const double s = static_cast<double>(problem.sigma());
  for (cplx& v : out.values()) v = s * std::conj(v);
  return out;
}

CgoSolution solve_cgo(const DiracProblem& problem, double tol, int max_terms) {
  if (!(tol > 0.0)) throw std::invalid_argument("solve_cgo: tol must be positive");
  if (max_terms < 1)
    throw std::invalid_argument("solve_cgo: max_terms must be >= 1");

  const int n = problem.n();
  const double L = problem.box_half_width();
  CgoSolution sol{ComplexGrid(n, L), ComplexGrid(n, L), 0, 0.0,
                  problem.k().k, problem.sigma(), n, L};

  bool q_zero = true;
  for (const cplx& v : problem.q().values())
    if (v != cplx(0.0, 0.0)) { q_zero = false; break; }

  ComplexGrid ones(n, L);
  for (cplx& v : ones.values()) v = 1.0;

  if (q_zero) {
    sol.phi1 = ones;  // A = B = 0: phi1 = 1, phi2 = 0, nothing to iterate
    return sol;
  }

  sol.phi1 = ones;
  ComplexGrid term = ones;
  double prev_norm = -1.0;
  bool converged = false;
  int used = 0;
  for (int v = 1; v <= max_terms; ++v) {
    term = apply_A(apply_B(term, problem), problem);  // (AB)^v (1)
    const double tn = problem.l2_omega(term);
    if (prev_norm > 0.0 && tn >= kDivergenceRatio * prev_norm) {
      std::ostringstream msg;
      msg << "solve_cgo: Neumann series is not contracting (term " << v
          << " norm ratio " << tn / prev_norm
          << " >= " << kDivergenceRatio
          << "); increase |k| or refine the grid";
      throw std::runtime_error(msg.str());
    }
    for (size_t i = 0; i < term.values().size(); ++i)
      sol.phi1.values()[i] += term.values()[i];
    used = v;
    if (tn <= tol) {
      converged = true;
      break;
    }
    prev_norm = tn;
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "solve_cgo: did not reach tol " << tol << " within " << max_terms
        << " terms (last term norm " << problem.l2_omega(term) << ")";
    throw std::runtime_error(msg.str());
  }

  sol.neumann_terms_used = used;
  sol.phi2 = apply_B(sol.phi1, problem);

  // honest residual of the coupled discrete system: phi1 = 1 + A phi2
  ComplexGrid res = apply_A(sol.phi2, problem);
  for (size_t i = 0; i < res.values().size(); ++i)
    res.values()[i] += ones.values()[i] - sol.phi1.values()[i];
  sol.residual_norm = problem.l2_omega(res);
  return sol;
}

void save_cgo_solution(const CgoSolution& sol, const std::string& prefix) {
  sol.phi1.write_binary_file(prefix + ".phi1.bin");
  sol.phi2.write_binary_file(prefix + ".phi2.bin");
  nlohmann::json j{{"k", {sol.k.real(), sol.k.imag()}},
                   {"sigma", sol.sigma},
                   {"n", sol.n},
                   {"L", sol.box_half_width},
                   {"terms", sol.neumann_terms_used},
                   {"residual", sol.residual_norm}};
  std::ofstream os(prefix + ".json");
  if (!os) throw std::runtime_error("save_cgo_solution: cannot open " + prefix + ".json");
  os << j.dump(2) << "\n";
}

CgoSolution load_cgo_solution(const std::string& prefix) {
  std::ifstream is(prefix + ".json");
  if (!is) throw std::runtime_error("load_cgo_solution: cannot open " + prefix + ".json");
  nlohmann::json j;
  is >> j;
  CgoSolution sol{ComplexGrid::read_binary_file(prefix + ".phi1.bin"),
                  ComplexGrid::read_binary_file(prefix + ".phi2.bin"),
                  j.at("terms").get<int>(),
                  j.at("residual").get<double>(),
                  cplx(j.at("k")[0].get<double>(), j.at("k")[1].get<double>()),
                  j.at("sigma").get<int>(),
                  j.at("n").get<int>(),
                  j.at("L").get<double>()};
  if (sol.phi1.n() != sol.n || sol.phi1.box_half_width() != sol.box_half_width ||
      !sol.phi1.same_layout(sol.phi2))
    throw std::runtime_error("load_cgo_solution: sidecar/grid layout mismatch");
  return sol;
}

double ab_norm_probe(const DiracProblem& problem) {
  ComplexGrid ones(problem.n(), problem.box_half_width());
  for (cplx& v : ones.values()) v = 1.0;
  return problem.l2_omega(apply_A(apply_B(ones, problem), problem));
}

}  // namespace dsii
