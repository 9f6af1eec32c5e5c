#include "hqc/cli.hpp"
#include "hqc/errors.hpp"
#include "hqc/harness.hpp"
#include "hqc/potential.hpp"
#include "hqc/qc_verifier.hpp"
#include "hqc/salpeter.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <ostream>
#include <string>

namespace hqc::cli {

std::vector<QuantumState> parse_state_list(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (const char ch : text) {
    if (ch == ',' || ch == ';' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!current.empty())
        tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty())
    tokens.push_back(std::move(current));

  const auto is_integer = [](const std::string &t) {
    return !t.empty() && t.find_first_not_of("0123456789") == std::string::npos;
  };
  std::vector<QuantumState> states;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!is_integer(tokens[i])) {
      states.push_back(parse_state_label(tokens[i]));
      continue;
    }
    if (i + 1 >= tokens.size() || !is_integer(tokens[i + 1]))
      throw ParseError("explicit state needs a k,l pair near '" + tokens[i] + "'");
    if (tokens[i].size() > 6 || tokens[i + 1].size() > 6)
      throw ParseError("quantum number too large");
    states.push_back({std::stoi(tokens[i]), std::stoi(tokens[i + 1])});
    ++i;
  }
  if (states.empty())
    throw ParseError("empty state list");
  return states;
}

namespace {

struct Options {
  std::string model = "qc";
  std::string states;
  std::string format = "text";
  std::optional<double> alpha;
  std::optional<double> m_e;
  std::optional<double> m_p;
  std::string constants_file;
  double lambda = 840.0;
  int z = 1;
  bool reduced = false;
  std::string reference;
  int basis_size = 64;
  double scale = 0.0;
  int quad_nodes = 4096;
  bool no_scale_search = false;
  std::string ladder;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string fmt(const char *format, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, format, value);
  return buffer;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width)
    s.insert(0, width - s.size(), ' ');
  return s;
}

harness::Environment environment(const Options &o) {
  harness::Environment env;
  try {
    if (!o.constants_file.empty())
      env.constants = load_constants_file(o.constants_file);
    if (o.alpha)
      env.constants.alpha = *o.alpha;
    if (o.m_e)
      env.constants.m_e = *o.m_e;
    if (o.m_p)
      env.constants.m_p = *o.m_p;
    validate(env.constants);
    env.lambda_mev = o.lambda;
    env.z = o.z;
    validate(PotentialParams::from(env.constants, o.lambda, o.z));
    env.mass = o.reduced ? MassChoice::reduced : MassChoice::electron;
    env.solver.basis_size = o.basis_size;
    env.solver.scale = o.scale;
    env.solver.quad_nodes = std::max(o.quad_nodes, 2 * o.basis_size);
    env.solver.scale_search = !o.no_scale_search;
    salpeter::validate(env.solver);
    if (!o.reference.empty())
      env.reference = harness::load_reference_csv(o.reference);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  return env;
}

std::vector<int> parse_ladder(const std::string &text) {
  std::vector<int> sizes;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty() || token.size() > 6 ||
        token.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("bad basis size in ladder: '" + token + "'");
    sizes.push_back(std::stoi(token));
  }
  return sizes;
}

std::vector<QuantumState> states_or_default(const Options &o) {
  return o.states.empty() ? harness::default_states() : parse_state_list(o.states);
}

void add_common(CLI::App *cmd, Options &o) {
  cmd->add_option("--states", o.states, "States, e.g. 1S,1P,2S or k,l pairs");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_option("--alpha", o.alpha, "Fine-structure constant");
  cmd->add_option("--me-mev", o.m_e, "Electron mass, MeV");
  cmd->add_option("--mp-mev", o.m_p, "Proton mass, MeV");
  cmd->add_option("--constants-file", o.constants_file, "key = value constant overrides");
  cmd->add_option("--lambda-mev", o.lambda, "Form-factor scale, MeV");
  cmd->add_option("--z", o.z, "Nuclear charge");
  cmd->add_flag("--reduced-mass", o.reduced, "Use the reduced mass (schrodinger, scalar)");
}

void add_solver(CLI::App *cmd, Options &o) {
  cmd->add_option("--basis-size", o.basis_size, "Salpeter basis size");
  cmd->add_option("--scale", o.scale, "Salpeter basis length scale, 1/MeV (0 = auto)");
  cmd->add_option("--quad-nodes", o.quad_nodes, "Momentum quadrature nodes");
  cmd->add_flag("--no-scale-search", o.no_scale_search, "Keep the scale fixed");
}

// -- subcommands -----------------------------------------------------------------

int spectrum(const Options &o, std::ostream &out, std::ostream &err) {
  const auto env = environment(o);
  const auto model = *model_from_name(o.model);
  const auto states = states_or_default(o);
  nlohmann::json levels = nlohmann::json::array();
  int status = 0;

  if (o.format == "csv")
    out << "state,k,l,N,model,T_eV\n";
  else if (o.format == "text")
    out << "state    N            T_" << model_name(model) << " [eV]\n";
  for (const auto &s : states) {
    double value = 0.0;
    try {
      value = harness::compute_level(model, s, env).value_ev;
    } catch (const ComputationError &e) {
      err << "hqc: " << s.label() << ": " << e.what() << '\n';
      status = 1;
      continue;
    }
    if (o.format == "csv")
      out << s.label() << ',' << s.k << ',' << s.l << ',' << s.n_principal() << ','
          << model_name(model) << ',' << harness::format_ev(value) << '\n';
    else if (o.format == "json")
      levels.push_back({{"state", s.label()},
                        {"k", s.k},
                        {"l", s.l},
                        {"N", s.n_principal()},
                        {"T_eV", value}});
    else
      out << pad(s.label(), 5) << pad(std::to_string(s.n_principal()), 5)
          << pad(harness::format_ev(value), 20) << '\n';
  }
  if (o.format == "json")
    out << nlohmann::json{{"model", std::string(model_name(model))}, {"levels", levels}}.dump(2)
        << '\n';
  return status;
}

int compare(const Options &o, std::ostream &out) {
  const auto env = environment(o);
  const auto table =
      harness::generate_table1(harness::default_models(), states_or_default(o), env);
  const auto report = harness::generate_table2(table);

  if (o.format == "json") {
    out << harness::render_json(report, env) << '\n';
    return 0;
  }
  if (o.format == "csv") {
    harness::write_csv(table, out);
    out << "\nstate,column,computed,published,status\n";
    for (const auto &c : report.checks)
      out << c.state.label() << ',' << c.column << ','
          << (c.computed ? fmt("%.6g", *c.computed) : std::string()) << ','
          << fmt("%.6g", c.published) << ',' << (c.match ? "MATCH" : "MISMATCH") << '\n';
    return 0;
  }

  out << "Energy levels [eV]\n";
  out << "state";
  for (const auto m : table.models)
    out << pad("T_" + std::string(model_name(m)), 16);
  out << pad("T_ref", 16) << '\n';
  for (const auto &row : table.rows) {
    out << pad(row.state.label(), 5);
    for (const auto &c : row.cells)
      out << pad(c.energy_ev ? harness::format_ev(*c.energy_ev) : "n/a", 16);
    out << pad(row.reference_ev ? harness::format_ev(*row.reference_ev) : "n/a", 16) << '\n';
  }
  for (const auto &row : table.rows)
    for (std::size_t i = 0; i < row.cells.size(); ++i)
      if (!row.cells[i].failure.empty())
        out << "  " << row.state.label() << ' ' << model_name(table.models[i])
            << " unavailable: " << row.cells[i].failure << '\n';

  out << "\nRelative accuracy [%] and imaginary mass [MeV] vs published values\n";
  out << "state  column        computed   published  status\n";
  for (const auto &c : report.checks)
    out << pad(c.state.label(), 5) << "  " << c.column
        << std::string(12 - std::min<std::size_t>(12, c.column.size()), ' ')
        << pad(c.computed ? fmt("%.4g", *c.computed) : "n/a", 10)
        << pad(fmt("%.4g", c.published), 12) << "  " << (c.match ? "MATCH" : "MISMATCH")
        << '\n';
  out << report.mismatches().size() << " of " << report.checks.size()
      << " cells differ from the published values by more than 2%\n";
  return 0;
}

int verify(const Options &o, std::ostream &out, std::ostream &err) {
  const auto env = environment(o);
  // Z enters both the root s+ and the potential as Zα
  auto c = env.constants;
  c.alpha *= env.z;
  const auto pot = PotentialParams::from(c, env.lambda_mev, 1);
  const auto rows = verify::verify_states(states_or_default(o), c, pot);
  constexpr double limit = 1e-5;
  int status = 0;

  if (o.format == "json") {
    auto doc = nlohmann::json::array();
    for (const auto &r : rows)
      doc.push_back({{"state", r.state.label()},
                     {"s_MeV2", r.s},
                     {"gap_MeV2", r.gap},
                     {"r1", r.r1},
                     {"r2", r.r2},
                     {"phase", r.phase},
                     {"residual", r.residual},
                     {"I_inf", r.i_infinity},
                     {"I_inf_residual", r.i_infinity_residual}});
    out << doc.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "state,s_MeV2,gap_MeV2,r1,r2,phase,residual,I_inf,I_inf_residual\n";
    for (const auto &r : rows)
      out << r.state.label() << ',' << fmt("%.17g", r.s) << ',' << fmt("%.10e", r.gap) << ','
          << fmt("%.10e", r.r1) << ',' << fmt("%.10e", r.r2) << ',' << fmt("%.12f", r.phase)
          << ',' << fmt("%.3e", r.residual) << ',' << fmt("%.12f", r.i_infinity) << ','
          << fmt("%.3e", r.i_infinity_residual) << '\n';
  } else {
    out << "state   m+^2 - s [MeV^2]      r1 [1/MeV]      r2 [1/MeV]   phase/(pi(k+1/2))-1"
           "   I_inf/(2 pi N)-1\n";
    for (const auto &r : rows)
      out << pad(r.state.label(), 5) << pad(fmt("%.10e", r.gap), 19)
          << pad(fmt("%.6e", r.r1), 16) << pad(fmt("%.6e", r.r2), 16)
          << pad(fmt("%.3e", r.residual), 22) << pad(fmt("%.3e", r.i_infinity_residual), 19)
          << '\n';
  }
  for (const auto &r : rows)
    if (!(std::abs(r.residual) <= limit)) {
      err << "hqc: " << r.state.label() << ": quantization residual " << r.residual
          << " exceeds " << limit << '\n';
      status = 1;
    }
  return status;
}

int widths(const Options &o, std::ostream &out) {
  const auto env = environment(o);
  auto c = env.constants;
  c.alpha *= env.z;
  const auto d = derive(c);
  const auto states = states_or_default(o);
  if (o.format == "csv")
    out << "state,N,M_re_MeV,M_im_MeV,Gamma_MeV\n";
  else if (o.format == "text")
    out << "state    N          M_re [MeV]    M_im [MeV]   Gamma [MeV]\n";
  auto doc = nlohmann::json::array();
  for (const auto &s : states) {
    const auto m = qc_complex_mass(s, d, c);
    if (o.format == "csv")
      out << s.label() << ',' << s.n_principal() << ',' << fmt("%.9f", m.re) << ','
          << harness::format_mev(m.im) << ',' << harness::format_mev(m.width()) << '\n';
    else if (o.format == "json")
      doc.push_back({{"state", s.label()},
                     {"N", s.n_principal()},
                     {"M_re_MeV", m.re},
                     {"M_im_MeV", m.im},
                     {"Gamma_MeV", m.width()}});
    else
      out << pad(s.label(), 5) << pad(std::to_string(s.n_principal()), 5)
          << pad(fmt("%.9f", m.re), 20) << pad(harness::format_mev(m.im), 14)
          << pad(harness::format_mev(m.width()), 14) << '\n';
  }
  if (o.format == "json")
    out << doc.dump(2) << '\n';
  return 0;
}

int salpeter_cmd(const Options &o, std::ostream &out) {
  const auto env = environment(o);
  auto cfg = env.solver;
  cfg.charge = env.z;
  const auto states = states_or_default(o);
  auto doc = nlohmann::json::array();

  if (!o.ladder.empty()) {
    const auto ladder = parse_ladder(o.ladder);
    if (o.format == "csv")
      out << "state,basis_size,T_eV,delta_eV,monotone\n";
    for (const auto &s : states) {
      const auto report = salpeter::convergence_report(s.l, s.k, ladder, cfg, env.constants);
      for (const auto &r : report.rungs) {
        if (o.format == "csv")
          out << s.label() << ',' << r.basis_size << ',' << harness::format_ev(r.value_ev)
              << ',' << fmt("%.3e", r.delta_ev) << ',' << (report.monotone ? 1 : 0) << '\n';
        else if (o.format == "json")
          doc.push_back({{"state", s.label()},
                         {"basis_size", r.basis_size},
                         {"T_eV", r.value_ev},
                         {"delta_eV", r.delta_ev},
                         {"monotone", report.monotone}});
        else
          out << pad(s.label(), 5) << pad(std::to_string(r.basis_size), 6)
              << pad(harness::format_ev(r.value_ev), 18) << pad(fmt("%.3e", r.delta_ev), 12)
              << '\n';
      }
      if (o.format == "text" && !report.monotone)
        out << "  " << s.label() << ": convergence not monotone\n";
    }
    if (o.format == "json")
      out << doc.dump(2) << '\n';
    return 0;
  }

  if (o.format == "csv")
    out << "state,k,l,T_eV,scale_inv_MeV\n";
  else if (o.format == "text")
    out << "state          T_salpeter [eV]    scale [1/MeV]\n";
  for (const auto &s : states) {
    const auto sol = salpeter::solve(s.l, s.k + 1, cfg, env.constants);
    const double value = sol.levels.back().value_ev;
    if (o.format == "csv")
      out << s.label() << ',' << s.k << ',' << s.l << ',' << harness::format_ev(value) << ','
          << fmt("%.6e", sol.scale) << '\n';
    else if (o.format == "json")
      doc.push_back({{"state", s.label()}, {"T_eV", value}, {"scale", sol.scale}});
    else
      out << pad(s.label(), 5) << pad(harness::format_ev(value), 24)
          << pad(fmt("%.6e", sol.scale), 17) << '\n';
  }
  if (o.format == "json")
    out << doc.dump(2) << '\n';
  return 0;
}

int constants_cmd(const Options &o, std::ostream &out) {
  const auto env = environment(o);
  const auto &c = env.constants;
  const auto d = derive(c);
  const std::vector<std::pair<std::string, double>> rows{
      {"alpha", c.alpha},
      {"m_e_mev", c.m_e},
      {"m_p_mev", c.m_p},
      {"hbar_c_mev_fm", c.hbar_c},
      {"m_plus_mev", d.m_plus},
      {"m_minus_mev", d.m_minus},
      {"m_a_mev", d.m_a},
      {"mu_mev", d.mu},
      {"rydberg_constant_per_m", rydberg_constant(c)},
      {"rydberg_energy_ev", rydberg_energy(c, MassChoice::electron)},
      {"rydberg_energy_reduced_ev", rydberg_energy(c, MassChoice::reduced)},
      {"critical_z_sommerfeld_j1/2", critical_z(CriticalModel::sommerfeld, 1, c)},
      {"critical_z_sommerfeld_j3/2", critical_z(CriticalModel::sommerfeld, 3, c)},
      {"critical_z_kg_l0", critical_z(CriticalModel::klein_gordon, 0, c)},
      {"critical_z_kg_l1", critical_z(CriticalModel::klein_gordon, 1, c)},
  };
  if (o.format == "json") {
    nlohmann::json doc = nlohmann::json::object();
    for (const auto &[k, v] : rows)
      doc[k] = v;
    out << doc.dump(2) << '\n';
    return 0;
  }
  if (o.format == "csv")
    out << "name,value\n";
  for (const auto &[k, v] : rows) {
    if (o.format == "csv")
      out << k << ',' << fmt("%.12g", v) << '\n';
    else
      out << k << std::string(30 - std::min<std::size_t>(30, k.size()), ' ')
          << fmt("%.12g", v) << '\n';
  }
  return 0;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Hydrogen energy levels: quasiclassical complex-mass model and baselines",
               "hqc"};
  app.require_subcommand(1);
  Options o;

  auto *spec = app.add_subcommand("spectrum", "Levels of one model");
  spec->add_option("--model", o.model, "Model")
      ->check(CLI::IsMember({"schrodinger", "sommerfeld", "kg", "scalar", "salpeter", "qc"}));
  add_common(spec, o);
  add_solver(spec, o);

  auto *cmp = app.add_subcommand("compare", "Level table and accuracy table vs reference");
  add_common(cmp, o);
  add_solver(cmp, o);
  cmp->add_option("--reference", o.reference, "Reference CSV (state,k,l,T_eV)");

  auto *ver = app.add_subcommand("verify", "Check the quantization condition numerically");
  add_common(ver, o);

  auto *wid = app.add_subcommand("widths", "Complex masses and widths");
  add_common(wid, o);

  auto *sal = app.add_subcommand("salpeter", "Spinless Salpeter levels");
  add_common(sal, o);
  add_solver(sal, o);
  sal->add_option("--ladder", o.ladder, "Basis sizes for a convergence report, e.g. 8,16,32");

  auto *con = app.add_subcommand("constants", "Constants and derived quantities");
  add_common(con, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (spec->parsed())
      return spectrum(o, out, err);
    if (cmp->parsed())
      return compare(o, out);
    if (ver->parsed())
      return verify(o, out, err);
    if (wid->parsed())
      return widths(o, out);
    if (sal->parsed())
      return salpeter_cmd(o, out);
    return constants_cmd(o, out);
  } catch (const UsageError &e) {
    err << "hqc: " << e.what() << '\n';
    return 2;
  } catch (const ParseError &e) {
    err << "hqc: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    err << "hqc: " << e.what() << '\n';
    return 1;
  }
}

} // namespace hqc::cli
