#include "hqc/spectra.hpp"
#include "hqc/errors.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace hqc {

namespace {

constexpr std::string_view orbital_letters = "SPDFGHIKLMNOQRTUVWXYZ";

struct ModelEntry {
  Model model;
  std::string_view name;
};

constexpr std::array<ModelEntry, 6> model_names{{
    {Model::schrodinger, "schrodinger"},
    {Model::sommerfeld, "sommerfeld"},
    {Model::klein_gordon, "kg"},
    {Model::scalar_coulomb, "scalar"},
    {Model::salpeter, "salpeter"},
    {Model::quasiclassical, "qc"},
}};

// -m x / (√(1+x)(1+√(1+x))) == m((1+x)^(-1/2) - 1)
double vector_coulomb_binding(double mass, double x) {
  return mass * inverse_sqrt_one_plus_minus_one(x);
}

} // namespace

std::string QuantumState::label() const {
  return std::to_string(k + 1) + orbital_letter(l);
}

char orbital_letter(int l) {
  if (l < 0 || l >= static_cast<int>(orbital_letters.size()))
    throw std::out_of_range("no spectroscopic letter for l = " + std::to_string(l));
  return orbital_letters[static_cast<std::size_t>(l)];
}

std::optional<int> orbital_from_letter(char letter) {
  const auto pos = orbital_letters.find(letter);
  if (pos == std::string_view::npos)
    return std::nullopt;
  return static_cast<int>(pos);
}

QuantumState parse_state_label(std::string_view text) {
  if (text.size() < 2)
    throw ParseError("state label too short: '" + std::string(text) + "'");
  const auto digits = text.substr(0, text.size() - 1);
  if (digits.find_first_not_of("0123456789") != std::string_view::npos)
    throw ParseError("state label must be <number><letter>: '" + std::string(text) + "'");
  const auto l = orbital_from_letter(text.back());
  if (!l)
    throw ParseError("unknown orbital letter in '" + std::string(text) + "'");
  int radial = 0;
  for (const char ch : digits) {
    radial = radial * 10 + (ch - '0');
    if (radial > 1'000'000)
      throw ParseError("state label number too large: '" + std::string(text) + "'");
  }
  if (radial < 1)
    throw ParseError("state labels start at 1: '" + std::string(text) + "'");
  return {radial - 1, *l};
}

std::string_view model_name(Model m) {
  for (const auto &e : model_names)
    if (e.model == m)
      return e.name;
  return "unknown";
}

std::optional<Model> model_from_name(std::string_view name) {
  for (const auto &e : model_names)
    if (e.name == name)
      return e.model;
  return std::nullopt;
}

double inverse_sqrt_one_plus_minus_one(double x) {
  const double root = std::sqrt(1.0 + x);
  return -x / (root * (1.0 + root));
}

EnergyLevel schrodinger_level(int n_principal, const Constants &c, MassChoice mass) {
  if (n_principal < 1)
    throw std::invalid_argument("principal quantum number must be >= 1");
  const double n = n_principal;
  const double value = -rydberg_energy(c, mass) / (n * n);
  return {value, Model::schrodinger, QuantumState{n_principal - 1, 0}};
}

EnergyLevel sommerfeld_level(const DiracState &s, int z, const Constants &c) {
  if (s.twice_j < 1 || s.twice_j % 2 == 0)
    throw std::invalid_argument("j must be a positive half-integer");
  const double j_half = 0.5 * (s.twice_j + 1); // j + 1/2
  if (j_half > s.n)
    throw std::invalid_argument("j + 1/2 must not exceed n");
  const double za = z * c.alpha;
  if (za >= j_half)
    throw SupercriticalCharge("Z alpha = " + std::to_string(za) +
                              " destroys states with j = " + std::to_string(s.j()));
  const double lambda = std::sqrt(j_half * j_half - za * za);
  const double ratio = za / ((s.n - j_half) + lambda);
  const double t = vector_coulomb_binding(c.m_e, ratio * ratio);
  return {t * Constants::ev_per_mev, Model::sommerfeld, s};
}

EnergyLevel kg_level(const QuantumState &s, int z, const Constants &c) {
  const double l_half = s.l + 0.5;
  const double za = z * c.alpha;
  if (za >= l_half)
    throw SupercriticalCharge("Z alpha = " + std::to_string(za) +
                              " destroys states with l = " + std::to_string(s.l));
  const double lambda = std::sqrt(l_half * l_half - za * za);
  // n - (l + 1/2) = k + 1/2
  const double ratio = za / ((s.k + 0.5) + lambda);
  const double t = vector_coulomb_binding(c.m_e, ratio * ratio);
  return {t * Constants::ev_per_mev, Model::klein_gordon, s};
}

EnergyLevel scalar_coulomb_level(const QuantumState &s, int z, const Constants &c,
                                 MassChoice mass) {
  const double l_half = s.l + 0.5;
  const double za = z * c.alpha;
  const double lambda = std::sqrt(l_half * l_half + za * za);
  const double y = za / ((s.k + 0.5) + lambda);
  if (y >= 1.0)
    throw DomainError("scalar-Coulomb coupling y = " + std::to_string(y) + " >= 1");
  const double m = mass == MassChoice::electron ? c.m_e : derive(c).mu;
  // m(√(1-y²) - 1)
  const double t = -m * y * y / (1.0 + std::sqrt(1.0 - y * y));
  return {t * Constants::ev_per_mev, Model::scalar_coulomb, s};
}

namespace {

// Ingredients of the squared-mass equation s² - 4e²s - (2 m_a m_- v)² = 0.
struct QcTerms {
  double v;   // α / 2N
  double e2;  // m_a² (1 - v²)
  double b;   // m_a m_- v
  double abs; // |ε²| = √(e⁴ + b²)
};

QcTerms qc_terms(const QuantumState &s, const DerivedMasses &d, const Constants &c) {
  if (s.k < 0 || s.l < 0)
    throw std::invalid_argument("quantum numbers must be non-negative");
  const double v = 0.5 * c.alpha / s.qc_principal();
  const double e2 = d.m_a * d.m_a * (1.0 - v) * (1.0 + v);
  const double b = d.m_a * d.m_minus * v;
  return {v, e2, b, std::hypot(e2, b)};
}

// M^Re² - m_+² from terms that are all O(v²).
double re_mass_sq_gap(const QcTerms &t, const DerivedMasses &d) {
  return 2.0 * t.b * t.b / (t.abs + t.e2) - d.m_plus * d.m_plus * t.v * t.v;
}

} // namespace

SquaredMassRoots qc_squared_mass(const QuantumState &s, const DerivedMasses &d,
                                 const Constants &c) {
  const auto t = qc_terms(s, d, c);
  const double gap = -re_mass_sq_gap(t, d);
  const double upper = 2.0 * (t.e2 + t.abs);
  // 2e² - 2|ε²| = -2b²/(|ε²| + e²)
  const double lower = -2.0 * t.b * t.b / (t.abs + t.e2);
  return {{upper, gap}, lower};
}

ComplexMass qc_complex_mass(const QuantumState &s, const DerivedMasses &d,
                            const Constants &c, Branch branch) {
  const auto t = qc_terms(s, d, c);
  const double sum = t.abs + t.e2;
  const double re = std::sqrt(2.0 * sum);
  // √(2(|ε²| - e²)) with the difference rewritten as b²/(|ε²| + e²)
  const double im = std::sqrt(2.0 / sum) * std::abs(t.b);
  if (branch == Branch::anti_atom)
    return {-re, -im, branch};
  return {re, im, branch};
}

EnergyLevel qc_level(const QuantumState &s, const DerivedMasses &d, const Constants &c) {
  const auto t = qc_terms(s, d, c);
  const double re = std::sqrt(2.0 * (t.abs + t.e2));
  const double kinetic = re_mass_sq_gap(t, d) / (re + d.m_plus);
  return {kinetic * Constants::ev_per_mev, Model::quasiclassical, s};
}

double qc_width(const QuantumState &s, const DerivedMasses &d, const Constants &c) {
  return qc_complex_mass(s, d, c).width();
}

int critical_z(CriticalModel model, int angular, const Constants &c) {
  if (angular < 0)
    throw std::invalid_argument("angular quantum number must be non-negative");
  const double bound =
      model == CriticalModel::sommerfeld ? 0.5 * (angular + 1) : angular + 0.5;
  auto z = static_cast<int>(std::floor(bound / c.alpha));
  while (z > 0 && z * c.alpha >= bound)
    --z;
  while ((z + 1) * c.alpha < bound)
    ++z;
  return z;
}

} // namespace hqc
