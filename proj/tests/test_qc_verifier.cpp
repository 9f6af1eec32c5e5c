#include "hqc/errors.hpp"
#include "hqc/qc_verifier.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace hqc;
using namespace hqc::verify;

namespace {
const auto consts = default_constants();
const auto masses = derive(consts);
const auto params = PotentialParams::from(consts);
constexpr double pi = std::numbers::pi;
} // namespace

TEST_CASE("angular eigenmomentum") {
  CHECK(angular_eigenmomentum(0) == 0.5);
  CHECK(angular_eigenmomentum(1) == 1.5);
  // the same for any potential
  for (double lambda : {1.0, 840.0, 1e6}) {
    const RadialProblem p(qc_squared_mass({0, 2}, masses, consts).upper, 2,
                          PotentialParams{consts.alpha, lambda}, consts);
    CHECK(p.angular() == 2.5);
  }
}

TEST_CASE("turning points bracket the allowed region") {
  const auto p = problem_at_root({0, 0}, consts, params);
  const auto tp = find_turning_points(p);
  CHECK(0 < tp.r1);
  CHECK(tp.r1 < tp.r2);
  CHECK(p.radicand(0.5 * (tp.r1 + tp.r2)) > 0);
  CHECK(p.scaled_radicand(tp.r1 * (1 - 1e-9)) < 0);
  CHECK(p.scaled_radicand(tp.r1 * (1 + 1e-9)) > 0);
  CHECK(p.scaled_radicand(tp.r2 * (1 - 1e-9)) > 0);
  CHECK(p.scaled_radicand(tp.r2 * (1 + 1e-9)) < 0);
  CHECK(std::abs(p.scaled_radicand(tp.r1)) < 1e-9 * 0.25);
  CHECK(std::abs(p.scaled_radicand(tp.r2)) < 1e-9 * 0.25);
}

TEST_CASE("inner turning point moves in with stronger coupling") {
  auto strong = consts;
  strong.alpha *= 2;
  const auto weak_tp = find_turning_points(problem_at_root({0, 0}, consts, params));
  const auto strong_tp = find_turning_points(
      problem_at_root({0, 0}, strong, PotentialParams::from(strong)));
  CHECK(strong_tp.r1 < weak_tp.r1);
}

TEST_CASE("no bound region at or above threshold") {
  const double m2 = masses.m_plus * masses.m_plus;
  CHECK_THROWS_AS(find_turning_points(RadialProblem({m2, 0.0}, 0, params, consts)),
                  NoBoundRegion);
  CHECK_THROWS_AS(find_turning_points(RadialProblem({m2 + 1, -1.0}, 0, params, consts)),
                  NoBoundRegion);
  // below m_minus² the kinematic factor turns negative
  const double low = masses.m_minus * masses.m_minus * 0.999;
  CHECK_THROWS_AS(find_turning_points(RadialProblem(SquaredMass::from_value(low, masses), 0,
                                                    params, consts)),
                  NoBoundRegion);
}

TEST_CASE("phase integral quantization") {
  const auto p1 = problem_at_root({0, 0}, consts, params);
  CHECK(phase_integral(p1).value == doctest::Approx(pi / 2).epsilon(1e-6));
  const auto p2 = problem_at_root({1, 0}, consts, params);
  CHECK(phase_integral(p2).value == doctest::Approx(1.5 * pi).epsilon(1e-6));
}

TEST_CASE("residuals for all states with k + l <= 4") {
  for (int n = 0; n <= 4; ++n)
    for (int l = 0; l <= n; ++l) {
      const QuantumState s{n - l, l};
      CAPTURE(s.label());
      CHECK(std::abs(quantization_residual(s, consts, params)) <= 1e-6);
    }
}

TEST_CASE("analytic I infinity") {
  for (int n = 1; n <= 20; ++n) {
    const auto s = qc_squared_mass({n - 1, 0}, masses, consts).upper;
    CHECK(analytic_i_infinity(s, masses, consts) ==
          doctest::Approx(2 * pi * n).epsilon(1e-10));
  }
  const double lo = masses.m_minus * masses.m_minus;
  CHECK(analytic_i_infinity(SquaredMass::from_value(lo * (1 + 1e-12), masses), masses,
                            consts) < 1e-3);
  const double gap = 1e-20;
  const double hi = masses.m_plus * masses.m_plus;
  CHECK(analytic_i_infinity({hi - gap, gap}, masses, consts) > 1e6);
  CHECK_THROWS_AS(analytic_i_infinity({hi, 0.0}, masses, consts), DomainError);
  CHECK_THROWS_AS(analytic_i_infinity(SquaredMass::from_value(lo / 2, masses), masses, consts),
                  DomainError);
}

TEST_CASE("verification rows chain together") {
  for (int n = 0; n <= 4; ++n)
    for (int l = 0; l <= n; ++l) {
      const auto row = verify_state({n - l, l}, consts, params);
      const int big_n = n + 1;
      CHECK(2 * row.phase == doctest::Approx(2 * pi * (n - l + 0.5)).epsilon(1e-6));
      CHECK(row.i_infinity == doctest::Approx(2 * pi * big_n).epsilon(1e-10));
      CHECK(std::abs(row.i_infinity_residual) <= 1e-10);
      CHECK(row.r1 < row.r2);
    }
}

TEST_CASE("phase integral increases with s") {
  std::mt19937 rng(31);
  for (int l : {0, 1, 3}) {
    // deepest bound region: gap < m_e m_p α² / (l + 1/2)²
    const double top = 0.8 * consts.m_e * consts.m_p * consts.alpha * consts.alpha /
                       ((l + 0.5) * (l + 0.5));
    std::uniform_real_distribution<double> log_gap(-5, std::log10(top));
    for (int i = 0; i < 40; ++i) {
      double g1 = std::pow(10.0, log_gap(rng));
      double g2 = std::pow(10.0, log_gap(rng));
      if (g1 == g2)
        continue;
      if (g1 < g2)
        std::swap(g1, g2); // g1 larger gap, smaller s
      const double m2 = masses.m_plus * masses.m_plus;
      const RadialProblem a({m2 - g1, g1}, l, params, consts);
      const RadialProblem b({m2 - g2, g2}, l, params, consts);
      CHECK(phase_integral(a).value < phase_integral(b).value);
    }
  }
}

TEST_CASE("refined rule agrees within the error estimate") {
  for (const QuantumState s : {QuantumState{0, 0}, QuantumState{2, 0}, QuantumState{1, 3}}) {
    const auto p = problem_at_root(s, consts, params);
    const auto coarse = phase_integral(p);
    const auto fine = phase_integral_refined(p);
    CHECK(std::abs(fine.value - coarse.value) <= coarse.error);
  }
}

TEST_CASE("quadrature failure is reported") {
  const auto p = problem_at_root({0, 0}, consts, params);
  CHECK_THROWS_AS(phase_integral(p, 1e-20), QuadratureFailure);
}

TEST_CASE("radicand avoids the m_plus^2 cancellation") {
  // far outside, Q -> -K gap - M_l²/r², evaluated without subtracting m_plus²
  const auto p = problem_at_root({0, 0}, consts, params);
  const double r = 1e9;
  const double expected =
      p.kinematic_factor() * (-p.gap() - 2 * masses.m_plus * potential_r(r, params) -
                              std::pow(potential_r(r, params), 2)) -
      0.25 / (r * r);
  CHECK(p.radicand(r) == doctest::Approx(expected).epsilon(1e-14));
}
