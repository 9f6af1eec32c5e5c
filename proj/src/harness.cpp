#include "hqc/harness.hpp"
#include "hqc/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hqc::harness {

// -- reference data -----------------------------------------------------------

void ReferenceDataset::add(const QuantumState &state, double energy_ev, int line) {
  if (find(state))
    throw DuplicateState("duplicate state " + state.label(), line);
  if (!(energy_ev < 0.0) || !std::isfinite(energy_ev))
    throw ParseError("reference energy for " + state.label() + " must be negative", line);
  entries_.emplace_back(state, energy_ev);
}

std::optional<double> ReferenceDataset::find(const QuantumState &state) const {
  const auto it = std::find_if(entries_.begin(), entries_.end(),
                               [&](const auto &e) { return e.first == state; });
  if (it == entries_.end())
    return std::nullopt;
  return it->second;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string &line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ','))
    out.push_back(trim(field));
  if (!line.empty() && line.back() == ',')
    out.emplace_back();
  return out;
}

int parse_int(const std::string &text, int line) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception &) {
    throw ParseError("not an integer: '" + text + "'", line);
  }
  if (used != text.size())
    throw ParseError("not an integer: '" + text + "'", line);
  return value;
}

double parse_double(const std::string &text, int line) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception &) {
    throw ParseError("not a number: '" + text + "'", line);
  }
  if (used != text.size())
    throw ParseError("not a number: '" + text + "'", line);
  return value;
}

} // namespace

ReferenceDataset parse_reference_csv(std::istream &in, std::string source) {
  ReferenceDataset ref(std::move(source));
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto text = trim(raw);
    if (text.empty() || text.front() == '#')
      continue;
    const auto fields = split(text);
    if (fields == std::vector<std::string>{"state", "k", "l", "T_eV"})
      continue;
    if (fields.size() != 4)
      throw ParseError("expected 4 fields state,k,l,T_eV", line);
    QuantumState state;
    try {
      state = parse_state_label(fields[0]);
    } catch (const ParseError &e) {
      throw ParseError(e.what(), line);
    }
    const QuantumState numbers{parse_int(fields[1], line), parse_int(fields[2], line)};
    if (numbers != state)
      throw ParseError("label " + fields[0] + " disagrees with k,l", line);
    ref.add(state, parse_double(fields[3], line), line);
  }
  return ref;
}

ReferenceDataset load_reference_csv(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path.string());
  return parse_reference_csv(in, path.string());
}

double relative_error(double t_model, double t_ref) {
  if (t_ref == 0.0)
    throw DomainError("relative error against a zero reference");
  return std::abs((t_model - t_ref) / t_ref) * 100.0;
}

// -- level dispatch ------------------------------------------------------------

std::vector<QuantumState> default_states() {
  std::vector<QuantumState> states;
  for (const auto &row : published_levels())
    states.push_back(row.state);
  return states;
}

std::vector<Model> default_models() {
  return {Model::klein_gordon, Model::salpeter, Model::quasiclassical};
}

namespace {

Constants with_charge(Constants c, int z) {
  c.alpha *= z;
  return c;
}

} // namespace

EnergyLevel compute_level(Model model, const QuantumState &state, const Environment &env) {
  const auto &c = env.constants;
  switch (model) {
  case Model::schrodinger: {
    auto level = schrodinger_level(state.n_principal(), with_charge(c, env.z), env.mass);
    level.state = state;
    return level;
  }
  case Model::sommerfeld: {
    auto level = sommerfeld_level({state.n_principal(), 2 * state.l + 1}, env.z, c);
    return level;
  }
  case Model::klein_gordon:
    return kg_level(state, env.z, c);
  case Model::scalar_coulomb:
    return scalar_coulomb_level(state, env.z, c, env.mass);
  case Model::salpeter: {
    auto cfg = env.solver;
    cfg.charge = env.z;
    return salpeter::level(state, cfg, c);
  }
  case Model::quasiclassical: {
    const auto scaled = with_charge(c, env.z);
    return qc_level(state, derive(scaled), scaled);
  }
  }
  throw std::invalid_argument("unknown model");
}

const Cell *ComparisonTable::cell(const QuantumState &state, Model model) const {
  const auto m = std::find(models.begin(), models.end(), model);
  if (m == models.end())
    return nullptr;
  for (const auto &row : rows)
    if (row.state == state)
      return &row.cells[static_cast<std::size_t>(m - models.begin())];
  return nullptr;
}

ComparisonTable generate_table1(const std::vector<Model> &models,
                                const std::vector<QuantumState> &states,
                                const Environment &env) {
  ComparisonTable table{models, {}};
  const auto scaled = with_charge(env.constants, env.z);
  for (const auto &state : states) {
    ComparisonRow row{state, {}, env.reference.find(state), std::nullopt};
    for (const auto model : models) {
      Cell cell;
      try {
        cell.energy_ev = compute_level(model, state, env).value_ev;
        if (row.reference_ev)
          cell.error_percent = relative_error(*cell.energy_ev, *row.reference_ev);
      } catch (const std::exception &e) {
        cell.failure = e.what();
      }
      row.cells.push_back(std::move(cell));
    }
    try {
      row.imaginary_mass_mev = qc_complex_mass(state, derive(scaled), scaled).im;
    } catch (const std::exception &) {
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

// -- published comparison --------------------------------------------------------

std::vector<CellCheck> AccuracyReport::mismatches() const {
  std::vector<CellCheck> out;
  std::copy_if(checks.begin(), checks.end(), std::back_inserter(out),
               [](const CellCheck &c) { return !c.match; });
  return out;
}

AccuracyReport generate_table2(const ComparisonTable &table) {
  AccuracyReport report{table, {}};
  const auto check = [&](const QuantumState &state, const char *column, double published,
                         std::optional<double> computed) {
    const bool match = computed && std::abs(*computed / published - 1.0) <=
                                       published_match_tolerance;
    report.checks.push_back({state, column, published, computed, match});
  };
  const auto eps = [&](const QuantumState &state, Model model) -> std::optional<double> {
    const auto *cell = table.cell(state, model);
    return cell ? cell->error_percent : std::nullopt;
  };
  for (const auto &row : published_accuracies()) {
    check(row.state, "eps_kg", row.eps_kg, eps(row.state, Model::klein_gordon));
    check(row.state, "eps_salpeter", row.eps_ss, eps(row.state, Model::salpeter));
    check(row.state, "eps_qc", row.eps_qc, eps(row.state, Model::quasiclassical));
    std::optional<double> m_im;
    for (const auto &r : table.rows)
      if (r.state == row.state)
        m_im = r.imaginary_mass_mev;
    check(row.state, "m_im", row.m_im, m_im);
  }
  return report;
}

AccuracyReport generate_table2(const Environment &env) {
  return generate_table2(generate_table1(default_models(), default_states(), env));
}

// -- serialization --------------------------------------------------------------

namespace {

std::string printf_string(const char *format, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, format, value);
  return buffer;
}

std::string cell_text(const std::optional<double> &v, Precision p, std::string (*fmt)(double)) {
  if (!v)
    return {};
  return p == Precision::exact ? printf_string("%.17g", *v) : fmt(*v);
}

} // namespace

std::string format_ev(double value) { return printf_string("%.8f", value); }
std::string format_mev(double value) { return printf_string("%.6f", value); }
std::string format_percent(double value) { return printf_string("%.3e", value); }

void write_csv(const ComparisonTable &table, std::ostream &out, Precision precision) {
  out << "state,k,l";
  for (const auto m : table.models)
    out << ",T_" << model_name(m) << "_eV";
  out << ",T_ref_eV";
  for (const auto m : table.models)
    out << ",eps_" << model_name(m) << "_pct";
  out << ",M_im_MeV\n";
  for (const auto &row : table.rows) {
    out << row.state.label() << ',' << row.state.k << ',' << row.state.l;
    for (const auto &c : row.cells)
      out << ',' << cell_text(c.energy_ev, precision, format_ev);
    out << ',' << cell_text(row.reference_ev, precision, format_ev);
    for (const auto &c : row.cells)
      out << ',' << cell_text(c.error_percent, precision, format_percent);
    out << ',' << cell_text(row.imaginary_mass_mev, precision, format_mev) << '\n';
  }
}

ComparisonTable read_csv(std::istream &in) {
  std::string raw;
  int line = 0;
  ComparisonTable table;
  bool have_header = false;
  std::size_t width = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto text = trim(raw);
    if (text.empty() || text.front() == '#')
      continue;
    const auto fields = split(text);
    if (!have_header) {
      if (fields.size() < 5 || fields[0] != "state" || fields[1] != "k" || fields[2] != "l")
        throw ParseError("missing comparison table header", line);
      for (std::size_t i = 3; i < fields.size(); ++i) {
        const auto &f = fields[i];
        if (f == "T_ref_eV")
          break;
        if (f.rfind("T_", 0) != 0 || f.size() < 6 || f.substr(f.size() - 3) != "_eV")
          throw ParseError("unexpected column '" + f + "'", line);
        const auto model = model_from_name(f.substr(2, f.size() - 5));
        if (!model)
          throw ParseError("unknown model column '" + f + "'", line);
        table.models.push_back(*model);
      }
      width = 3 + 2 * table.models.size() + 2;
      if (fields.size() != width)
        throw ParseError("header width mismatch", line);
      have_header = true;
      continue;
    }
    if (fields.size() != width)
      throw ParseError("expected " + std::to_string(width) + " fields", line);
    const auto optional_number = [&](const std::string &f) -> std::optional<double> {
      if (f.empty())
        return std::nullopt;
      return parse_double(f, line);
    };
    ComparisonRow row;
    row.state = {parse_int(fields[1], line), parse_int(fields[2], line)};
    const std::size_t nm = table.models.size();
    for (std::size_t i = 0; i < nm; ++i)
      row.cells.push_back({optional_number(fields[3 + i]), optional_number(fields[4 + nm + i]), {}});
    row.reference_ev = optional_number(fields[3 + nm]);
    row.imaginary_mass_mev = optional_number(fields[4 + 2 * nm]);
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string render_json(const AccuracyReport &report, const Environment &env) {
  using nlohmann::json;
  const auto optional_json = [](const std::optional<double> &v) -> json {
    return v ? json(*v) : json(nullptr);
  };

  json doc;
  doc["constants"] = {{"alpha", env.constants.alpha},
                      {"m_e_mev", env.constants.m_e},
                      {"m_p_mev", env.constants.m_p},
                      {"hbar_c", env.constants.hbar_c},
                      {"lambda_mev", env.lambda_mev},
                      {"z", env.z}};
  doc["models"] = json::array();
  for (const auto m : report.table.models)
    doc["models"].push_back(std::string(model_name(m)));

  doc["table"] = json::array();
  for (const auto &row : report.table.rows) {
    json energies = json::object();
    json errors = json::object();
    for (std::size_t i = 0; i < row.cells.size(); ++i) {
      const std::string name(model_name(report.table.models[i]));
      energies[name] = optional_json(row.cells[i].energy_ev);
      errors[name] = optional_json(row.cells[i].error_percent);
    }
    doc["table"].push_back({{"state", row.state.label()},
                            {"k", row.state.k},
                            {"l", row.state.l},
                            {"T_eV", energies},
                            {"T_ref_eV", optional_json(row.reference_ev)},
                            {"eps_pct", errors},
                            {"M_im_MeV", optional_json(row.imaginary_mass_mev)}});
  }

  doc["mismatches"] = json::array();
  for (const auto &m : report.mismatches())
    doc["mismatches"].push_back({{"state", m.state.label()},
                                 {"column", m.column},
                                 {"published", m.published},
                                 {"computed", optional_json(m.computed)}});
  return doc.dump(2);
}

} // namespace hqc::harness
