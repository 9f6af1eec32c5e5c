#pragma once

#include "hqc/constants.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace hqc {

/// Radial (k) and orbital (l) quantum numbers of a spinless level.
struct QuantumState {
  int k = 0;
  int l = 0;

  int n_principal() const { return k + l + 1; }
  /// (k + 1/2) + (l + 1/2); equal to n_principal() for every l >= 0.
  double qc_principal() const { return (k + 0.5) + (l + 0.5); }
  /// "(k+1)L", e.g. k=0,l=1 -> "1P"; k=1,l=0 -> "2S".
  std::string label() const;

  auto operator<=>(const QuantumState &) const = default;
};

/// Orbital letter for l (S, P, D, F, G, H, I, K, ...); throws past the table.
char orbital_letter(int l);
/// Inverse of orbital_letter; nullopt for unknown letters.
std::optional<int> orbital_from_letter(char letter);

/// "1S" -> (0,0), "2P" -> (1,1), "3S" -> (2,0). Throws ParseError on an
/// unknown letter or a non-positive leading integer.
QuantumState parse_state_label(std::string_view text);

/// Dirac-type label: principal n and total angular momentum j = twice_j / 2.
struct DiracState {
  int n = 1;
  int twice_j = 1;

  double j() const { return 0.5 * twice_j; }
  auto operator<=>(const DiracState &) const = default;
};

enum class Model {
  schrodinger,
  sommerfeld,
  klein_gordon,
  scalar_coulomb,
  salpeter,
  quasiclassical,
};

std::string_view model_name(Model m);
std::optional<Model> model_from_name(std::string_view name);

struct EnergyLevel {
  double value_ev;
  Model model;
  std::variant<QuantumState, DiracState> state;
};

enum class Branch { atom, anti_atom };

/// Complex eigenmass M = M^Re + i M^Im of a bound state, MeV.
struct ComplexMass {
  double re;
  double im;
  Branch branch = Branch::atom;

  double width() const { return 2.0 * (im < 0.0 ? -im : im); }
};

/// A squared mass s together with its gap below threshold, m_+² - s. The gap
/// is carried separately because s ≈ m_+² to ~1e-8 for every atomic level.
struct SquaredMass {
  double s;
  double gap;

  /// Gap computed by direct subtraction; fine away from threshold.
  static SquaredMass from_value(double s, const DerivedMasses &d) {
    return {s, d.m_plus * d.m_plus - s};
  }
};

struct SquaredMassRoots {
  SquaredMass upper; // physical (atom) root, in (m_-², m_+²)
  double lower;      // second root, <= 0
};

// -- closed-form baselines --------------------------------------------------

EnergyLevel schrodinger_level(int n_principal, const Constants &c, MassChoice mass);

/// Vector-Coulomb Dirac levels. Throws SupercriticalCharge if Zα >= j + 1/2
/// and std::invalid_argument unless 1 <= j + 1/2 <= n.
EnergyLevel sommerfeld_level(const DiracState &s, int z, const Constants &c);

/// Static Klein-Gordon levels with bare m_e. Throws SupercriticalCharge if
/// Zα >= l + 1/2.
EnergyLevel kg_level(const QuantumState &s, int z, const Constants &c);

/// Lorentz-scalar Coulomb levels; λ'(l) is real for every Z. Throws
/// DomainError if the effective coupling y reaches 1.
EnergyLevel scalar_coulomb_level(const QuantumState &s, int z, const Constants &c,
                                 MassChoice mass = MassChoice::electron);

// -- quasiclassical complex-mass solution -----------------------------------

SquaredMassRoots qc_squared_mass(const QuantumState &s, const DerivedMasses &d,
                                 const Constants &c);
ComplexMass qc_complex_mass(const QuantumState &s, const DerivedMasses &d,
                            const Constants &c, Branch branch = Branch::atom);
/// T = |M^Re| - m_p - m_e in eV. Depends on (k, l) only through N.
EnergyLevel qc_level(const QuantumState &s, const DerivedMasses &d, const Constants &c);
/// Γ = 2|M^Im|, MeV.
double qc_width(const QuantumState &s, const DerivedMasses &d, const Constants &c);

enum class CriticalModel { sommerfeld, klein_gordon };

/// Largest integer Z with Zα < j + 1/2 (sommerfeld, angular = 2j) or
/// Zα < l + 1/2 (klein_gordon, angular = l).
int critical_z(CriticalModel model, int angular, const Constants &c);

/// (1+x)^(-1/2) - 1 without cancellation for small x.
double inverse_sqrt_one_plus_minus_one(double x);

} // namespace hqc
