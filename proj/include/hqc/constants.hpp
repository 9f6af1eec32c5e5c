#pragma once

#include <filesystem>
#include <istream>

namespace hqc {

// Physical constants in natural units (ħ = c = 1, masses in MeV).
// Energies leave the library in eV; ev_per_mev is the only scale factor.
struct Constants {
  double alpha;  // fine-structure constant
  double m_e;    // electron rest mass, MeV
  double m_p;    // proton rest mass, MeV
  double hbar_c; // MeV·fm

  static constexpr double ev_per_mev = 1.0e6;
};

// CODATA-2014 values.
Constants default_constants();

// Throws std::invalid_argument if 0 < alpha < 0.01, 0 < m_e < m_p and
// hbar_c > 0 do not all hold.
void validate(const Constants &c);

// Reads `key = value` lines (keys alpha, m_e_mev, m_p_mev, hbar_c) on top of
// `base`. Blank lines and `#` comments are skipped. Throws ParseError.
Constants read_constants(std::istream &in, Constants base = default_constants());
Constants load_constants_file(const std::filesystem::path &path,
                              Constants base = default_constants());

struct DerivedMasses {
  double m_plus;  // m_p + m_e
  double m_minus; // m_p - m_e
  double m_a;     // m_plus / 2
  double mu;      // reduced mass
};

DerivedMasses derive(const Constants &c);

enum class MassChoice { electron, reduced };

// R∞ in m⁻¹: m_e α²/2 divided by h·c = 2πħc.
double rydberg_constant(const Constants &c);

// m α²/2 in eV with m = m_e or μ.
double rydberg_energy(const Constants &c, MassChoice mass);

} // namespace hqc
