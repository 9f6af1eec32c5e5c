#pragma once

#include "hqc/constants.hpp"

namespace hqc {

// Coulomb interaction softened by the proton's dipole charge form factor.
// Distances are in MeV⁻¹, momenta in MeV.
struct PotentialParams {
  double alpha;
  double lambda = 840.0; // form-factor scale Λ, MeV
  int z = 1;

  static PotentialParams from(const Constants &c, double lambda = 840.0, int z = 1) {
    return {c.alpha, lambda, z};
  }
};

// Throws std::invalid_argument unless alpha > 0, lambda > 0, z >= 1.
void validate(const PotentialParams &p);

// (Λ²/(q²+Λ²))²
double form_factor(double q, const PotentialParams &p);

// α F(q): → α as q → 0, → 0 as q → ∞.
double running_alpha_q(double q, const PotentialParams &p);

// α (Λ²r²/(1+Λ²r²))², the configuration-space counterpart.
double running_alpha_r(double r, const PotentialParams &p);

// W(r) = -z α_H(r)/r. Vanishes at r = 0 since α_H ~ r⁴ there.
double potential_r(double r, const PotentialParams &p);

// M_H(r) = m_+ + W(r).
double mass_function(double r, const PotentialParams &p, const DerivedMasses &d);

// w_i(r) = m_i + W(r)/2 for the two constituents.
struct ParticleMasses {
  double electron;
  double proton;
};
ParticleMasses particle_masses(double r, const PotentialParams &p, const Constants &c);

} // namespace hqc
