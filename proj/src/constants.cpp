#include "hqc/constants.hpp"
#include "hqc/errors.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hqc {

Constants default_constants() {
  return {7.2973525664e-3, 0.5109989461, 938.2720813, 197.3269788};
}

void validate(const Constants &c) {
  const auto finite_pos = [](double x) { return std::isfinite(x) && x > 0.0; };
  if (!finite_pos(c.alpha) || c.alpha >= 0.01)
    throw std::invalid_argument("alpha must lie in (0, 0.01)");
  if (!finite_pos(c.m_e) || !finite_pos(c.m_p) || !(c.m_e < c.m_p))
    throw std::invalid_argument("masses must satisfy 0 < m_e < m_p");
  if (!finite_pos(c.hbar_c))
    throw std::invalid_argument("hbar_c must be positive");
}

namespace {

std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string &text, int line) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception &) {
    throw ParseError("not a number: '" + text + "'", line);
  }
  if (used != text.size())
    throw ParseError("trailing characters in '" + text + "'", line);
  return value;
}

} // namespace

Constants read_constants(std::istream &in, Constants base) {
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto text = trim(raw.substr(0, raw.find('#')));
    if (text.empty())
      continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected key = value", line);
    const auto key = trim(text.substr(0, eq));
    const auto value = parse_number(trim(text.substr(eq + 1)), line);
    if (key == "alpha")
      base.alpha = value;
    else if (key == "m_e_mev")
      base.m_e = value;
    else if (key == "m_p_mev")
      base.m_p = value;
    else if (key == "hbar_c")
      base.hbar_c = value;
    else
      throw ParseError("unknown key '" + key + "'", line);
  }
  return base;
}

Constants load_constants_file(const std::filesystem::path &path, Constants base) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path.string());
  return read_constants(in, base);
}

DerivedMasses derive(const Constants &c) {
  const double m_plus = c.m_p + c.m_e;
  return {m_plus, c.m_p - c.m_e, 0.5 * m_plus, c.m_e * c.m_p / m_plus};
}

double rydberg_constant(const Constants &c) {
  // MeV / (MeV·fm) = fm⁻¹; 1 fm⁻¹ = 1e15 m⁻¹.
  const double hc = 2.0 * std::numbers::pi * c.hbar_c;
  return 0.5 * c.m_e * c.alpha * c.alpha / hc * 1.0e15;
}

double rydberg_energy(const Constants &c, MassChoice mass) {
  const double m = mass == MassChoice::electron ? c.m_e : derive(c).mu;
  return 0.5 * m * c.alpha * c.alpha * Constants::ev_per_mev;
}

} // namespace hqc
