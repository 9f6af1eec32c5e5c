#include "hqc/qc_verifier.hpp"
#include "hqc/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hqc::verify {

double angular_eigenmomentum(int l) {
  if (l < 0)
    throw std::invalid_argument("l must be non-negative");
  return l + 0.5;
}

RadialProblem::RadialProblem(SquaredMass s, int l, PotentialParams potential,
                             const Constants &c)
    : s_(s), l_(l), potential_(potential), masses_(derive(c)),
      angular_(angular_eigenmomentum(l)) {
  // s - m_-² = (m_+² - m_-²) - gap = 4 m_e m_p - gap
  const double above_pair = 4.0 * c.m_e * c.m_p - s.gap;
  kinematic_ = s.s > 0.0 ? 0.25 * above_pair / s.s : 0.0;
}

double RadialProblem::squared_momentum(double r) const {
  const double w = potential_r(r, potential_);
  return kinematic_ * (-s_.gap - 2.0 * masses_.m_plus * w - w * w);
}

double RadialProblem::radicand(double r) const {
  return squared_momentum(r) - angular_ * angular_ / (r * r);
}

double RadialProblem::scaled_radicand(double r) const {
  // r W(r) = -z α_H(r), finite everywhere
  const double rw = -potential_.z * running_alpha_r(r, potential_);
  return kinematic_ * (-s_.gap * r * r - 2.0 * masses_.m_plus * rw * r - rw * rw) -
         angular_ * angular_;
}

namespace {

template <class F> double bisect(F &&f, double neg, double pos) {
  // f(neg) <= 0 < f(pos); the bracket may be oriented either way in r.
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (neg + pos);
    if (std::abs(pos - neg) <= 1e-13 * std::max(std::abs(neg), std::abs(pos)))
      break;
    if (f(mid) > 0.0)
      pos = mid;
    else
      neg = mid;
  }
  return 0.5 * (neg + pos);
}

} // namespace

TurningPoints find_turning_points(const RadialProblem &p) {
  if (!(p.kinematic_factor() > 0.0))
    throw NoBoundRegion("squared mass at or below the pair threshold m_-^2");
  if (!(p.gap() > 0.0))
    throw NoBoundRegion("squared mass at or above the free threshold m_+^2");

  const auto &pot = p.potential();
  const auto f = [&](double r) { return p.scaled_radicand(r); };

  // Beyond r_hi the attractive term cannot beat -gap r².
  const double r_lo = 1e-3 / pot.lambda;
  const double r_hi = 4.0 * p.masses().m_plus * pot.z * pot.alpha / p.gap();
  if (!(r_hi > r_lo))
    throw NoBoundRegion("allowed region below the form-factor scale");

  constexpr double ratio = 1.01;
  std::vector<double> grid;
  for (double r = r_lo; r < r_hi; r *= ratio)
    grid.push_back(r);
  grid.push_back(r_hi);

  std::vector<double> values(grid.size());
  std::transform(grid.begin(), grid.end(), values.begin(), f);
  const auto peak = std::max_element(values.begin(), values.end()) - values.begin();
  if (!(values[peak] > 0.0))
    throw NoBoundRegion("radicand is nowhere positive");

  auto inner = peak;
  while (inner > 0 && values[inner] > 0.0)
    --inner;
  auto outer = peak;
  while (outer + 1 < static_cast<std::ptrdiff_t>(grid.size()) && values[outer] > 0.0)
    ++outer;
  if (values[inner] > 0.0 || values[outer] > 0.0)
    throw NoBoundRegion("allowed region not enclosed by the search window");

  return {bisect(f, grid[inner], grid[peak]), bisect(f, grid[outer], grid[peak])};
}

namespace {

template <unsigned Points>
PhaseIntegral integrate_phase(const RadialProblem &p, double relative_tolerance) {
  const auto tp = find_turning_points(p);
  const double span = tp.r2 - tp.r1;
  const auto integrand = [&](double theta) {
    const double sn = std::sin(theta);
    const double cs = std::cos(theta);
    const double r = tp.r1 + span * sn * sn;
    const double q = p.scaled_radicand(r);
    return q > 0.0 ? std::sqrt(q) / r * 2.0 * span * sn * cs : 0.0;
  };
  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, Points>::integrate(
      integrand, 0.0, std::numbers::pi / 2, 20, 1e-3 * relative_tolerance, &error);
  error = std::max(error, 64.0 * std::numeric_limits<double>::epsilon() * std::abs(value));
  if (!std::isfinite(value) || error > relative_tolerance * std::abs(value))
    throw QuadratureFailure("phase integral error estimate " + std::to_string(error) +
                            " exceeds target");
  return {value, error, tp};
}

} // namespace

PhaseIntegral phase_integral(const RadialProblem &p, double relative_tolerance) {
  return integrate_phase<31>(p, relative_tolerance);
}

PhaseIntegral phase_integral_refined(const RadialProblem &p, double relative_tolerance) {
  return integrate_phase<61>(p, relative_tolerance);
}

double analytic_i_infinity(const SquaredMass &s, const DerivedMasses &d,
                           const Constants &c) {
  const double above_pair = 4.0 * c.m_e * c.m_p - s.gap;
  if (!(above_pair > 0.0) || !(s.gap > 0.0))
    throw DomainError("I_infinity requires m_-^2 < s < m_+^2");
  return std::numbers::pi * c.alpha * d.m_plus * std::sqrt(above_pair / (s.s * s.gap));
}

RadialProblem problem_at_root(const QuantumState &state, const Constants &c,
                              const PotentialParams &potential) {
  const auto roots = qc_squared_mass(state, derive(c), c);
  return RadialProblem(roots.upper, state.l, potential, c);
}

double quantization_residual(const QuantumState &state, const Constants &c,
                             const PotentialParams &potential) {
  const double target = std::numbers::pi * (state.k + 0.5);
  return (phase_integral(problem_at_root(state, c, potential)).value - target) / target;
}

VerificationRow verify_state(const QuantumState &state, const Constants &c,
                             const PotentialParams &potential) {
  const auto problem = problem_at_root(state, c, potential);
  const auto phase = phase_integral(problem);
  const double target = std::numbers::pi * (state.k + 0.5);
  const double i_inf = analytic_i_infinity({problem.s(), problem.gap()}, derive(c), c);
  const double two_pi_n = 2.0 * std::numbers::pi * state.qc_principal();
  return {state,
          problem.s(),
          problem.gap(),
          phase.points.r1,
          phase.points.r2,
          phase.value,
          phase.error,
          (phase.value - target) / target,
          i_inf,
          (i_inf - two_pi_n) / two_pi_n};
}

std::vector<VerificationRow> verify_states(const std::vector<QuantumState> &states,
                                           const Constants &c,
                                           const PotentialParams &potential) {
  std::vector<VerificationRow> rows;
  rows.reserve(states.size());
  for (const auto &s : states)
    rows.push_back(verify_state(s, c, potential));
  return rows;
}

} // namespace hqc::verify
