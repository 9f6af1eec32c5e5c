#include "hqc/salpeter.hpp"
#include "hqc/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hqc::salpeter {

namespace {

constexpr int panel_points = 16;
constexpr double log_momentum_half_range = 18.0; // u = ln(p/β) ∈ [-18, 18]
constexpr double max_condition = 1e12;

double default_scale(int n_principal, const Constants &c) {
  return n_principal / (derive(c).mu * c.alpha);
}

Eigen::VectorXd lowest_eigenvalues(const OperatorMatrices &m) {
  const Eigen::MatrixXd h = m.kinetic + m.potential;
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      h, m.overlap, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (solver.info() != Eigen::Success)
    throw NoConvergence("generalized eigensolver failed");
  return solver.eigenvalues();
}

} // namespace

void validate(const SolverConfig &cfg) {
  if (cfg.basis_size < 4)
    throw std::invalid_argument("basis_size must be >= 4");
  if (!(cfg.scale >= 0.0) || !std::isfinite(cfg.scale))
    throw std::invalid_argument("scale must be >= 0 (0 selects the default)");
  if (cfg.quad_nodes < 2 * cfg.basis_size)
    throw std::invalid_argument("quad_nodes must be >= 2 * basis_size");
  if (!(cfg.bracket_low > 0.0) || !(cfg.bracket_low < cfg.bracket_high))
    throw std::invalid_argument("scale bracket must satisfy 0 < low < high");
  if (cfg.charge < 0)
    throw std::invalid_argument("charge must be non-negative");
}

Eigen::MatrixXd sturmian_overlap(int l, int basis_size) {
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(basis_size, basis_size);
  for (int k = 0; k < basis_size; ++k) {
    s(k, k) = 2.0 * (k + l + 1);
    if (k + 1 < basis_size) {
      const double off = -std::sqrt((k + 1.0) * (k + 2.0 * l + 2.0));
      s(k, k + 1) = off;
      s(k + 1, k) = off;
    }
  }
  return s;
}

MomentumGrid momentum_grid(int l, int basis_size, double beta, int quad_nodes) {
  using rule = boost::math::quadrature::gauss<double, panel_points>;
  const int panels = (quad_nodes + panel_points - 1) / panel_points;
  const int nodes = panels * panel_points;
  const double width = 2.0 * log_momentum_half_range / panels;

  // Symmetric 16-point rule on [-1, 1] from boost's half-rule.
  std::vector<double> x, w;
  for (std::size_t i = 0; i < rule::abscissa().size(); ++i) {
    x.push_back(rule::abscissa()[i]);
    w.push_back(rule::weights()[i]);
    x.push_back(-rule::abscissa()[i]);
    w.push_back(rule::weights()[i]);
  }

  MomentumGrid grid;
  grid.momentum.resize(nodes);
  grid.weight.resize(nodes);
  grid.functions.resize(basis_size, nodes);

  // ln of β^{-3/2} (2n/√(π h_k)) 2^{2l+2} l!,  h_k = (k+2l+1)!/k!
  std::vector<double> log_norm(basis_size);
  for (int k = 0; k < basis_size; ++k) {
    const double n = k + l + 1;
    log_norm[k] = -1.5 * std::log(beta) + std::log(2.0 * n) -
                  0.5 * std::log(std::numbers::pi) -
                  0.5 * (std::lgamma(k + 2.0 * l + 2.0) - std::lgamma(k + 1.0)) +
                  (2.0 * l + 2.0) * std::numbers::ln2 + std::lgamma(l + 1.0);
  }

  const double lambda = l + 1.0;
  int col = 0;
  for (int panel = 0; panel < panels; ++panel) {
    const double centre = -log_momentum_half_range + (panel + 0.5) * width;
    for (int i = 0; i < panel_points; ++i, ++col) {
      const double u = centre + 0.5 * width * x[i];
      const double y = std::exp(u);
      const double t = std::tanh(u);
      const double p = beta * y;
      grid.momentum(col) = p;
      grid.weight(col) = 0.5 * width * w[i] * p * p * p;

      // y^l / (1 + y²)^{l+2}
      const double log_shape = l * u - (l + 2.0) * std::log1p(y * y);
      double prev = 0.0;
      double curr = 1.0; // C_0
      for (int k = 0; k < basis_size; ++k) {
        grid.functions(k, col) = std::exp(log_norm[k] + log_shape) * curr;
        const double next = (2.0 * (k + lambda) * t * curr - (k + 2.0 * lambda - 1.0) * prev) /
                            (k + 1.0);
        prev = curr;
        curr = next;
      }
    }
  }
  return grid;
}

Eigen::MatrixXd kinetic_excess_matrix(const MomentumGrid &grid,
                                      std::span<const double> masses) {
  Eigen::VectorXd excess = Eigen::VectorXd::Zero(grid.momentum.size());
  for (Eigen::Index i = 0; i < grid.momentum.size(); ++i) {
    const double p2 = grid.momentum(i) * grid.momentum(i);
    for (const double m : masses)
      excess(i) += p2 / (std::sqrt(p2 + m * m) + m);
  }
  const Eigen::MatrixXd weighted = grid.functions * grid.weight.cwiseProduct(excess).asDiagonal();
  Eigen::MatrixXd k = weighted * grid.functions.transpose();
  return 0.5 * (k + k.transpose());
}

OperatorMatrices build_matrices(int l, const SolverConfig &cfg, const Constants &c) {
  validate(cfg);
  if (l < 0)
    throw std::invalid_argument("l must be non-negative");
  const double scale = cfg.scale > 0.0 ? cfg.scale : default_scale(l + 1, c);
  const double beta = 1.0 / scale;

  OperatorMatrices m;
  m.overlap = sturmian_overlap(l, cfg.basis_size);
  const Eigen::VectorXd ev =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m.overlap, Eigen::EigenvaluesOnly)
          .eigenvalues();
  if (!(ev(0) > 0.0) || ev(ev.size() - 1) / ev(0) > max_condition)
    throw IllConditionedBasis("overlap condition number exceeds 1e12");

  const auto grid = momentum_grid(l, cfg.basis_size, beta, cfg.quad_nodes);
  const double masses[] = {c.m_e, c.m_p};
  m.kinetic = kinetic_excess_matrix(grid, masses);
  // ⟨χ_i| 1/r |χ_j⟩ = 2β δ_ij
  m.potential = Eigen::MatrixXd::Identity(cfg.basis_size, cfg.basis_size) *
                (-2.0 * cfg.charge * c.alpha * beta);
  m.rest_mass = c.m_e + c.m_p;
  return m;
}

namespace {

double level_at_scale(int l, int index, SolverConfig cfg, double scale, const Constants &c) {
  cfg.scale = scale;
  return lowest_eigenvalues(build_matrices(l, cfg, c))(index);
}

// Golden-section minimum of f over [a, b].
template <class F> double golden_section(F &&f, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 < f2 ? x1 : x2;
}

} // namespace

Solution solve(int l, int count, const SolverConfig &cfg, const Constants &c) {
  validate(cfg);
  if (count < 1 || count > cfg.basis_size / 2)
    throw std::invalid_argument("count must be in [1, basis_size/2]");
  const int index = count - 1;
  double scale = cfg.scale > 0.0 ? cfg.scale : default_scale(l + count, c);

  if (cfg.scale_search) {
    const auto objective = [&](double log_scale) {
      return level_at_scale(l, index, cfg, std::exp(log_scale), c);
    };
    const double lo = std::log(scale * cfg.bracket_low);
    const double hi = std::log(scale * cfg.bracket_high);
    scale = std::exp(golden_section(objective, lo, hi, 1e-3));
  }

  SolverConfig fixed = cfg;
  fixed.scale = scale;
  const Eigen::VectorXd values = lowest_eigenvalues(build_matrices(l, fixed, c));

  if (cfg.check_convergence) {
    SolverConfig doubled = fixed;
    doubled.basis_size *= 2;
    doubled.quad_nodes = std::max(2 * cfg.quad_nodes, 2 * doubled.basis_size);
    const double refined = lowest_eigenvalues(build_matrices(l, doubled, c))(index);
    const double shift = std::abs(refined - values(index)) * Constants::ev_per_mev;
    if (shift > cfg.tolerance_ev)
      throw NoConvergence("doubling the basis moved the level by " + std::to_string(shift) +
                          " eV");
  }

  Solution out{{}, scale};
  for (int k = 0; k < count; ++k)
    out.levels.push_back(
        {values(k) * Constants::ev_per_mev, Model::salpeter, QuantumState{k, l}});
  return out;
}

std::vector<EnergyLevel> lowest_levels(int l, int count, const SolverConfig &cfg,
                                       const Constants &c) {
  return solve(l, count, cfg, c).levels;
}

EnergyLevel level(const QuantumState &state, const SolverConfig &cfg, const Constants &c) {
  return solve(state.l, state.k + 1, cfg, c).levels.back();
}

ConvergenceReport convergence_report(int l, int level_index, const std::vector<int> &ladder,
                                     const SolverConfig &cfg, const Constants &c) {
  if (ladder.size() < 3)
    throw std::invalid_argument("convergence ladder needs at least three rungs");
  ConvergenceReport report{{}, true, cfg.scale > 0.0 ? cfg.scale
                                                     : default_scale(l + level_index + 1, c)};
  for (const int size : ladder) {
    SolverConfig rung = cfg;
    rung.basis_size = size;
    rung.quad_nodes = std::max(cfg.quad_nodes, 2 * size);
    rung.scale = report.scale;
    if (level_index >= size)
      throw std::invalid_argument("level index exceeds basis size");
    const double value =
        lowest_eigenvalues(build_matrices(l, rung, c))(level_index) * Constants::ev_per_mev;
    const double delta = report.rungs.empty() ? 0.0 : value - report.rungs.back().value_ev;
    report.rungs.push_back({size, value, delta});
  }
  for (std::size_t i = 2; i < report.rungs.size(); ++i)
    if (std::abs(report.rungs[i].delta_ev) > std::abs(report.rungs[i - 1].delta_ev) + 1e-9)
      report.monotone = false;
  return report;
}

} // namespace hqc::salpeter
