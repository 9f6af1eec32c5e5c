#pragma once

#include "hqc/constants.hpp"
#include "hqc/salpeter.hpp"
#include "hqc/spectra.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hqc::harness {

// Reference binding energies keyed by state, in insertion order.
class ReferenceDataset {
public:
  explicit ReferenceDataset(std::string source = {}) : source_(std::move(source)) {}

  /// Throws DuplicateState (line number attached when known) and ParseError
  /// for non-negative energies.
  void add(const QuantumState &state, double energy_ev, int line = 0);
  std::optional<double> find(const QuantumState &state) const;

  const std::string &source() const { return source_; }
  const std::vector<std::pair<QuantumState, double>> &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

private:
  std::string source_;
  std::vector<std::pair<QuantumState, double>> entries_;
};

/// NIST spin-averaged levels for the ten comparison states 1S … 3P.
ReferenceDataset builtin_reference();

/// CSV rows `state,k,l,T_eV`; optional header with exactly those names;
/// `#` comment lines and blank lines are skipped. The label must agree with
/// (k, l). Throws ParseError (with line) or DuplicateState.
ReferenceDataset parse_reference_csv(std::istream &in, std::string source = "csv");
ReferenceDataset load_reference_csv(const std::filesystem::path &path);

/// |(t_model - t_ref) / t_ref| · 100. Throws DomainError if t_ref == 0.
double relative_error(double t_model, double t_ref);

struct Environment {
  Constants constants = default_constants();
  double lambda_mev = 840.0;
  int z = 1;
  MassChoice mass = MassChoice::electron; // schrodinger and scalar models
  salpeter::SolverConfig solver{};
  ReferenceDataset reference = builtin_reference();
};

/// The ten comparison states in table order.
std::vector<QuantumState> default_states();
/// KG, SS, QC.
std::vector<Model> default_models();

/// One model for one state. Sommerfeld levels use n = k+l+1, j = l + 1/2.
EnergyLevel compute_level(Model model, const QuantumState &state, const Environment &env);

struct Cell {
  std::optional<double> energy_ev;
  std::optional<double> error_percent;
  std::string failure;
};

struct ComparisonRow {
  QuantumState state;
  std::vector<Cell> cells; // parallel to ComparisonTable::models
  std::optional<double> reference_ev;
  std::optional<double> imaginary_mass_mev;
};

struct ComparisonTable {
  std::vector<Model> models;
  std::vector<ComparisonRow> rows;

  const Cell *cell(const QuantumState &state, Model model) const;
};

/// Energies computed live, reference from env.reference, ε recomputed from
/// the computed energies. A failing model marks its cell unavailable.
ComparisonTable generate_table1(const std::vector<Model> &models,
                                const std::vector<QuantumState> &states,
                                const Environment &env);

// Published comparison values, used only as targets.
struct PublishedLevels {
  QuantumState state;
  double kg, ss, qc, nist; // eV
};
struct PublishedAccuracies {
  QuantumState state;
  double eps_kg, eps_ss, eps_qc; // percent
  double m_im;                   // MeV
};
const std::vector<PublishedLevels> &published_levels();
const std::vector<PublishedAccuracies> &published_accuracies();

struct CellCheck {
  QuantumState state;
  std::string column; // eps_kg, eps_salpeter, eps_qc, m_im
  double published;
  std::optional<double> computed;
  bool match;
};

struct AccuracyReport {
  ComparisonTable table;
  std::vector<CellCheck> checks;

  std::vector<CellCheck> mismatches() const;
};

inline constexpr double published_match_tolerance = 0.02;

/// Compares recomputed ε and M^Im against the published accuracies at 2 %
/// relative. `table` must hold the default models for the published states.
AccuracyReport generate_table2(const ComparisonTable &table);
AccuracyReport generate_table2(const Environment &env);

enum class Precision {
  presentation, // 8 decimals eV, 6 decimals MeV, 4 significant digits for ε
  exact,        // 17 significant digits everywhere
};

void write_csv(const ComparisonTable &table, std::ostream &out,
               Precision precision = Precision::presentation);
/// Parses what write_csv produced. Throws ParseError.
ComparisonTable read_csv(std::istream &in);

/// JSON document with keys table, models, constants, mismatches.
std::string render_json(const AccuracyReport &report, const Environment &env);

std::string format_ev(double value);
std::string format_mev(double value);
std::string format_percent(double value);

} // namespace hqc::harness
