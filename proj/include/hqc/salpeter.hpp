#pragma once

#include "hqc/constants.hpp"
#include "hqc/spectra.hpp"

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace hqc::salpeter {

// Spinless Salpeter equation
//   [√(p² + m_e²) + √(p² + m_p²) - Zα/r] ψ = M ψ
// solved variationally in a Coulomb-Sturmian basis
//   χ_k(r) ∝ (2βr)^l e^{-βr} L_k^{(2l+1)}(2βr),   β = 1/scale.
// Overlap and Coulomb matrices are analytic (tridiagonal and diagonal). The
// momentum-space transforms are Gegenbauer polynomials in
// t = (p² - β²)/(p² + β²), so the kinetic matrix is a one-dimensional
// quadrature in u = ln(p/β), where t = tanh u.

struct SolverConfig {
  int basis_size = 64;
  double scale = 0.0;    // variational length 1/β in MeV⁻¹; 0 picks N/(μα)
  int quad_nodes = 4096; // composite 16-point Gauss-Legendre nodes in ln p
  bool scale_search = true;
  double bracket_low = 1.0 / 64.0; // search window, as factors of the start scale
  double bracket_high = 4.0;
  int charge = 1;
  bool check_convergence = false; // re-solve at twice the basis size
  double tolerance_ev = 1e-4;
};

// Throws std::invalid_argument unless basis_size >= 4, scale >= 0,
// quad_nodes >= 2·basis_size and the bracket is ordered and positive.
void validate(const SolverConfig &cfg);

struct OperatorMatrices {
  Eigen::MatrixXd kinetic;   // Σ_i [√(p² + m_i²) - m_i], MeV
  Eigen::MatrixXd potential; // -Zα/r, MeV
  Eigen::MatrixXd overlap;
  double rest_mass;          // m_e + m_p

  /// √(p² + m_e²) + √(p² + m_p²) including the rest masses.
  Eigen::MatrixXd full_kinetic() const { return kinetic + rest_mass * overlap; }
};

/// Sturmian overlap ⟨χ_i|χ_j⟩: diagonal 2(k+l+1), off-diagonal
/// -√((k+1)(k+2l+2)).
Eigen::MatrixXd sturmian_overlap(int l, int basis_size);

/// Momentum-space radial functions on the quadrature grid.
struct MomentumGrid {
  Eigen::VectorXd momentum; // p at each node, MeV
  Eigen::VectorXd weight;   // p³ du · Gauss weight, so Σ w f g = ∫ p² f g dp
  Eigen::MatrixXd functions; // basis_size × nodes
};

MomentumGrid momentum_grid(int l, int basis_size, double beta, int quad_nodes);

/// Σ over `masses` of [√(p² + m²) - m] in the basis.
Eigen::MatrixXd kinetic_excess_matrix(const MomentumGrid &grid,
                                      std::span<const double> masses);

/// Throws IllConditionedBasis if the overlap condition number exceeds 1e12.
/// A zero cfg.scale resolves to (l+1)/(μα).
OperatorMatrices build_matrices(int l, const SolverConfig &cfg, const Constants &c);

struct Solution {
  std::vector<EnergyLevel> levels; // binding energies M - m_+, eV
  double scale;                    // scale used for the final solve
};

/// Lowest `count` levels of angular momentum l. With scale_search, the
/// `count`-th level is minimized over the scale by golden-section search in
/// ln(scale). Throws NoConvergence when check_convergence is set and the
/// doubled basis moves that level by more than tolerance_ev.
Solution solve(int l, int count, const SolverConfig &cfg, const Constants &c);

std::vector<EnergyLevel> lowest_levels(int l, int count, const SolverConfig &cfg,
                                       const Constants &c);

/// Level for one state: solve(l, k + 1, ...) and keep the last entry.
EnergyLevel level(const QuantumState &state, const SolverConfig &cfg, const Constants &c);

struct Rung {
  int basis_size;
  double value_ev;
  double delta_ev; // change from the previous rung; 0 on the first
};

struct ConvergenceReport {
  std::vector<Rung> rungs;
  bool monotone; // |delta| non-increasing past the first rung
  double scale;
};

/// Solves at each ladder size with a fixed scale (cfg.scale, or the default
/// when zero). Needs at least three rungs.
ConvergenceReport convergence_report(int l, int level_index, const std::vector<int> &ladder,
                                     const SolverConfig &cfg, const Constants &c);

} // namespace hqc::salpeter
