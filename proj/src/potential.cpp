#include "hqc/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace hqc {

void validate(const PotentialParams &p) {
  if (!(p.alpha > 0.0) || !std::isfinite(p.alpha))
    throw std::invalid_argument("potential alpha must be positive");
  if (!(p.lambda > 0.0) || !std::isfinite(p.lambda))
    throw std::invalid_argument("lambda must be positive");
  if (p.z < 1)
    throw std::invalid_argument("z must be >= 1");
}

double form_factor(double q, const PotentialParams &p) {
  const double l2 = p.lambda * p.lambda;
  const double f = l2 / (q * q + l2);
  return f * f;
}

double running_alpha_q(double q, const PotentialParams &p) {
  return p.alpha * form_factor(q, p);
}

namespace {

// x²/(1+x²) without overflow for large x.
double saturation(double x) {
  if (x > 1.0)
    return 1.0 / (1.0 + 1.0 / (x * x));
  const double x2 = x * x;
  return x2 / (1.0 + x2);
}

} // namespace

double running_alpha_r(double r, const PotentialParams &p) {
  const double s = saturation(p.lambda * r);
  return p.alpha * s * s;
}

double potential_r(double r, const PotentialParams &p) {
  const double x = p.lambda * r;
  if (x <= 1.0) {
    // α Λ⁴ r³ / (1+Λ²r²)², exact down to r = 0.
    const double d = 1.0 + x * x;
    return -p.z * p.alpha * p.lambda * x * x * x / (d * d);
  }
  return -p.z * running_alpha_r(r, p) / r;
}

double mass_function(double r, const PotentialParams &p, const DerivedMasses &d) {
  return d.m_plus + potential_r(r, p);
}

ParticleMasses particle_masses(double r, const PotentialParams &p, const Constants &c) {
  const double half_w = 0.5 * potential_r(r, p);
  return {c.m_e + half_w, c.m_p + half_w};
}

} // namespace hqc
