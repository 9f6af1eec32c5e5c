#pragma once

#include "hqc/constants.hpp"
#include "hqc/potential.hpp"
#include "hqc/spectra.hpp"

#include <vector>

namespace hqc::verify {

/// |M| = l + 1/2, the same for every spherically symmetric potential.
double angular_eigenmomentum(int l);

/// Radial equation of the two-body wave equation at a fixed squared mass:
///   Q(r) = K(s) [s - M_H(r)²] - M_l² / r²,   K(s) = (1 - m_-²/s) / 4.
/// The bracket s - M_H² is evaluated as gap-free combination
///   -(m_+² - s) - 2 m_+ W - W²
/// so that nothing of order m_+² is ever subtracted.
class RadialProblem {
public:
  RadialProblem(SquaredMass s, int l, PotentialParams potential, const Constants &c);

  double s() const { return s_.s; }
  double gap() const { return s_.gap; }
  int l() const { return l_; }
  double kinematic_factor() const { return kinematic_; }
  double angular() const { return angular_; }
  const PotentialParams &potential() const { return potential_; }
  const DerivedMasses &masses() const { return masses_; }

  double mass(double r) const { return mass_function(r, potential_, masses_); }
  /// p²(r) = K(s) [s - M_H(r)²].
  double squared_momentum(double r) const;
  /// Q(r) = p²(r) - M_l²/r².
  double radicand(double r) const;
  /// r² Q(r); same sign as Q, finite at r = 0.
  double scaled_radicand(double r) const;

private:
  SquaredMass s_;
  int l_;
  PotentialParams potential_;
  DerivedMasses masses_;
  double kinematic_;
  double angular_;
};

struct TurningPoints {
  double r1;
  double r2;
};

/// Brackets the classically allowed region on a geometric grid, then bisects
/// both ends to 1e-13 relative. Throws NoBoundRegion if Q is nowhere positive.
TurningPoints find_turning_points(const RadialProblem &p);

struct PhaseIntegral {
  double value;
  double error; // estimate, floored at the rounding level of the result
  TurningPoints points;
};

/// ∫_{r1}^{r2} √Q(r) dr with r = r1 + (r2 - r1) sin²θ mapping out the
/// inverse-square-root endpoints. Throws QuadratureFailure if the error
/// estimate exceeds `relative_tolerance`·|value|.
PhaseIntegral phase_integral(const RadialProblem &p, double relative_tolerance = 1e-9);

/// Same integral with a higher-order Kronrod rule, for self-validation.
PhaseIntegral phase_integral_refined(const RadialProblem &p,
                                     double relative_tolerance = 1e-9);

/// I∞ = π α m_+ √((s - m_-²) / (s (m_+² - s))). Throws DomainError outside
/// m_-² < s < m_+².
double analytic_i_infinity(const SquaredMass &s, const DerivedMasses &d,
                           const Constants &c);

/// Radial problem at the physical root s+ of the state.
RadialProblem problem_at_root(const QuantumState &state, const Constants &c,
                              const PotentialParams &potential);

/// (phase_integral(s+) - π(k+1/2)) / π(k+1/2).
double quantization_residual(const QuantumState &state, const Constants &c,
                             const PotentialParams &potential);

struct VerificationRow {
  QuantumState state;
  double s;
  double gap;
  double r1;
  double r2;
  double phase;
  double phase_error;
  double residual;             // relative, vs π(k+1/2)
  double i_infinity;
  double i_infinity_residual;  // relative, vs 2πN
};

VerificationRow verify_state(const QuantumState &state, const Constants &c,
                             const PotentialParams &potential);
std::vector<VerificationRow> verify_states(const std::vector<QuantumState> &states,
                                           const Constants &c,
                                           const PotentialParams &potential);

} // namespace hqc::verify
