#include "hqc/errors.hpp"
#include "hqc/spectra.hpp"

#include "oracle/double_double.hpp"

#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <random>
#include <vector>

using namespace hqc;
using big = boost::multiprecision::cpp_bin_float_50;

namespace {

const auto consts = default_constants();
const auto masses = derive(consts);

double qc(int k, int l) { return qc_level({k, l}, masses, consts).value_ev; }

// M^Re - m_plus from the textbook roots, no rewriting.
double naive_qc_double(int n) {
  const double v = consts.alpha / (2.0 * n);
  const double e2 = masses.m_a * masses.m_a * (1 - v * v);
  const double b = masses.m_a * masses.m_minus * v;
  const double abs = std::sqrt(e2 * e2 + b * b);
  return (std::sqrt(2 * (abs + e2)) - masses.m_plus) * 1e6;
}

double naive_qc_dd(int n) {
  using oracle::dd;
  const dd v = dd(consts.alpha) / dd(2.0 * n);
  // same double inputs as the library; only the arithmetic is extended
  const dd m_a = masses.m_a;
  const dd m_minus = masses.m_minus;
  const dd m_plus = masses.m_plus;
  const dd e2 = m_a * m_a * (dd(1.0) - v * v);
  const dd b = m_a * m_minus * v;
  const dd abs = oracle::sqrt(e2 * e2 + b * b);
  return ((oracle::sqrt(dd(2.0) * (abs + e2)) - m_plus) * dd(1e6)).to_double();
}

} // namespace

TEST_CASE("state labels") {
  CHECK(parse_state_label("1P") == QuantumState{0, 1});
  CHECK(parse_state_label("1S") == QuantumState{0, 0});
  CHECK(parse_state_label("3S") == QuantumState{2, 0});
  CHECK(parse_state_label("12G") == QuantumState{11, 4});
  CHECK_THROWS_AS(parse_state_label("0S"), ParseError);
  CHECK_THROWS_AS(parse_state_label("S"), ParseError);
  CHECK_THROWS_AS(parse_state_label("1J"), ParseError);
  CHECK_THROWS_AS(parse_state_label("1s"), ParseError);
  CHECK_THROWS_AS(parse_state_label("-1S"), ParseError);
  CHECK_THROWS_AS(parse_state_label("99999999S"), ParseError);
  CHECK(QuantumState{1, 0}.label() == "2S");
  CHECK(QuantumState{0, 7}.label() == "1K");
  CHECK(QuantumState{1, 1}.n_principal() == 3);
  CHECK_THROWS_AS(orbital_letter(-1), std::out_of_range);
}

TEST_CASE("label round trip") {
  for (int k = 0; k < 9; ++k)
    for (const char letter : std::string("SPDFGH")) {
      const std::string label = std::to_string(k + 1) + letter;
      CHECK(parse_state_label(label).label() == label);
    }
}

TEST_CASE("qc_principal equals n_principal") {
  for (int k = 0; k < 10; ++k)
    for (int l = 0; l < 10; ++l)
      CHECK(QuantumState{k, l}.qc_principal() == QuantumState{k, l}.n_principal());
}

TEST_CASE("model names") {
  for (const auto m : {Model::schrodinger, Model::sommerfeld, Model::klein_gordon,
                       Model::scalar_coulomb, Model::salpeter, Model::quasiclassical})
    CHECK(model_from_name(model_name(m)) == m);
  CHECK_FALSE(model_from_name("dirac"));
}

TEST_CASE("schrodinger") {
  const double e1 = schrodinger_level(1, consts, MassChoice::electron).value_ev;
  CHECK(std::abs(e1 + 13.605693) < 1e-5);
  CHECK(schrodinger_level(2, consts, MassChoice::electron).value_ev == e1 / 4);
  CHECK(std::abs(schrodinger_level(100000, consts, MassChoice::electron).value_ev) < 2e-9);
  CHECK(std::abs(schrodinger_level(1, consts, MassChoice::reduced).value_ev + 13.5982871498) <
        1e-9);
  CHECK_THROWS_AS(schrodinger_level(0, consts, MassChoice::electron), std::invalid_argument);
}

TEST_CASE("sommerfeld") {
  const double e = sommerfeld_level({1, 1}, 1, consts).value_ev;
  // n = 1, j = 1/2: m_e(√(1-α²) - 1), evaluated at 50 digits
  const big a = consts.alpha;
  const big collapsed = big(consts.m_e) * (sqrt(1 - a * a) - 1) * 1e6;
  CHECK(e == doctest::Approx(collapsed.convert_to<double>()).epsilon(1e-14));
  CHECK(std::abs(e + 13.6058741436) < 1e-9);
  CHECK_THROWS_AS(sommerfeld_level({1, 1}, 138, consts), SupercriticalCharge);
  CHECK_NOTHROW(sommerfeld_level({1, 1}, 137, consts));
  CHECK_THROWS_AS(sommerfeld_level({1, 3}, 1, consts), std::invalid_argument);
  CHECK_THROWS_AS(sommerfeld_level({2, 2}, 1, consts), std::invalid_argument);
}

TEST_CASE("klein-gordon") {
  CHECK(std::abs(kg_level({0, 0}, 1, consts).value_ev + 13.60659871) < 5e-5);
  CHECK(std::abs(kg_level({0, 1}, 1, consts).value_ev + 3.40144965) < 5e-5);
  CHECK(std::abs(kg_level({0, 0}, 1, consts).value_ev + 13.606598755) < 1e-8);
  CHECK_THROWS_AS(kg_level({0, 0}, 69, consts), SupercriticalCharge);
  CHECK_NOTHROW(kg_level({0, 0}, 68, consts));
}

TEST_CASE("scalar coulomb") {
  const double e = scalar_coulomb_level({0, 0}, 1, consts).value_ev;
  CHECK(std::abs(e + 13.60423) < 2e-4);
  CHECK(std::abs(e + 13.6044252548) < 1e-9);
  CHECK(scalar_coulomb_level({0, 0}, 0, consts).value_ev == 0.0);
  for (int z : {1, 50, 137, 500, 10000})
    CHECK(std::isfinite(scalar_coulomb_level({0, 0}, z, consts).value_ev));
}

TEST_CASE("squared-mass roots") {
  for (int n = 1; n <= 20; ++n) {
    const auto r = qc_squared_mass({n - 1, 0}, masses, consts);
    const big v = big(consts.alpha) / (2 * n);
    const big m_a = (big(consts.m_p) + consts.m_e) / 2;
    const big m_minus = big(consts.m_p) - consts.m_e;
    const big e2 = m_a * m_a * (1 - v * v);
    const big b2 = 4 * m_a * m_a * m_minus * m_minus * v * v;
    for (const double s : {r.upper.s, r.lower}) {
      const big f = big(s) * s - 4 * e2 * s - b2;
      // scale of the individual terms
      const big scale = big(s) * s + 4 * e2 * abs(big(s)) + b2;
      CHECK(static_cast<double>(abs(f) / scale) <= 1e-12);
    }
    CHECK(r.upper.gap == doctest::Approx(masses.m_plus * masses.m_plus - r.upper.s)
                             .epsilon(1e-6));
  }
  const double ratio = -qc_squared_mass({0, 0}, masses, consts).upper.gap /
                       (masses.m_plus * masses.m_plus);
  CHECK(std::abs(ratio + 2.899e-8) < 2e-10);
  CHECK(std::abs(ratio + 2.89696455e-8) < 1e-15);
}

TEST_CASE("equal masses") {
  auto c = consts;
  c.m_e = c.m_p = 1.0;
  const auto d = derive(c);
  const auto r = qc_squared_mass({0, 0}, d, c);
  const double v = c.alpha / 2;
  CHECK(r.upper.s == doctest::Approx(4 * d.m_a * d.m_a * (1 - v * v)).epsilon(1e-15));
  CHECK(r.lower == 0.0);
  CHECK(qc_complex_mass({0, 0}, d, c).im == 0.0);
  CHECK(qc_width({2, 1}, d, c) == 0.0);
}

TEST_CASE("imaginary mass") {
  const double expected[] = {3.42158667, 1.71079332, 1.14052888, 0.85539666, 0.68431732};
  const double m1 = qc_complex_mass({0, 0}, masses, consts).im;
  CHECK(std::abs(m1 - 3.421587) < 5e-6);
  CHECK(std::abs(qc_complex_mass({0, 1}, masses, consts).im - 1.710793) < 5e-6);
  for (int n = 1; n <= 5; ++n) {
    const double im = qc_complex_mass({0, n - 1}, masses, consts).im;
    CHECK(std::abs(im - expected[n - 1]) < 1e-8);
    CHECK(qc_width({0, n - 1}, masses, consts) * n ==
          doctest::Approx(2 * m1).epsilon(1e-6));
  }
  CHECK(std::abs(qc_width({0, 0}, masses, consts) - 6.843174) < 1e-5);
}

TEST_CASE("anti-atom branch") {
  for (int n = 1; n <= 6; ++n) {
    const auto a = qc_complex_mass({0, n - 1}, masses, consts);
    const auto b = qc_complex_mass({0, n - 1}, masses, consts, Branch::anti_atom);
    CHECK(b.re == -a.re);
    CHECK(b.im == -a.im);
    CHECK(b.width() == a.width());
  }
}

TEST_CASE("complex mass identities") {
  for (int n = 1; n <= 20; ++n) {
    const auto m = qc_complex_mass({n - 1, 0}, masses, consts);
    const double v = consts.alpha / (2.0 * n);
    const double b = masses.m_a * masses.m_minus * v;
    const double e2 = masses.m_a * masses.m_a * (1 - v * v);
    CHECK(m.re * m.im == doctest::Approx(2 * b).epsilon(1e-10));
    CHECK(m.re * m.re + m.im * m.im == doctest::Approx(4 * std::hypot(e2, b)).epsilon(1e-10));
  }
}

TEST_CASE("qc levels") {
  CHECK(std::abs(qc(0, 0) + 13.59810653) < 5e-5);
  CHECK(std::abs(qc(0, 0) + 13.5981066128) < 1e-9);
  CHECK(std::abs(qc(0, 1) + 3.39956046) < 5e-5);
  CHECK(qc(0, 1) == qc(1, 0));
  CHECK(qc(0, 2) == qc(1, 1));
  CHECK(qc(1, 1) == qc(2, 0));
}

TEST_CASE("qc degeneracy in N") {
  for (int n = 1; n <= 6; ++n)
    for (int l = 0; l < n; ++l)
      CHECK(std::abs(qc(n - 1 - l, l) - qc(n - 1, 0)) <= 1e-14 * std::abs(qc(n - 1, 0)));
}

TEST_CASE("qc nonrelativistic limit") {
  auto c = consts;
  c.alpha = 1e-4;
  for (int n = 1; n <= 5; ++n) {
    const double t = qc_level({n - 1, 0}, masses, c).value_ev;
    const double bohr = -masses.mu * c.alpha * c.alpha / (2.0 * n * n) * 1e6;
    CHECK(std::abs(t / bohr - 1) < 1e-4);
  }
}

TEST_CASE("stable form against double-double") {
  const std::vector<QuantumState> states{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4},
                                         {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}};
  for (const auto &s : states) {
    const int n = s.n_principal();
    const double stable = qc_level(s, masses, consts).value_ev;
    CHECK(std::abs(stable - naive_qc_dd(n)) <= 1e-10);
    CHECK(std::abs(stable - naive_qc_double(n)) <= 1e-6);
  }
}

TEST_CASE("levels increase with N") {
  for (int n = 1; n < 12; ++n) {
    const auto both = [&](double a, double b) {
      CHECK(a < b);
      CHECK(b < 0);
    };
    both(schrodinger_level(n, consts, MassChoice::electron).value_ev,
         schrodinger_level(n + 1, consts, MassChoice::electron).value_ev);
    both(sommerfeld_level({n, 1}, 1, consts).value_ev,
         sommerfeld_level({n + 1, 1}, 1, consts).value_ev);
    both(kg_level({n - 1, 0}, 1, consts).value_ev, kg_level({n, 0}, 1, consts).value_ev);
    both(scalar_coulomb_level({n - 1, 0}, 1, consts).value_ev,
         scalar_coulomb_level({n, 0}, 1, consts).value_ev);
    both(qc(n - 1, 0), qc(n, 0));
  }
}

TEST_CASE("critical charge") {
  CHECK(critical_z(CriticalModel::sommerfeld, 1, consts) == 137);
  CHECK(critical_z(CriticalModel::sommerfeld, 3, consts) == 274);
  CHECK(critical_z(CriticalModel::klein_gordon, 0, consts) == 68);
  CHECK_THROWS_AS(critical_z(CriticalModel::klein_gordon, -1, consts), std::invalid_argument);
}

TEST_CASE("stable inverse square root") {
  const double x = 0.25;
  CHECK(inverse_sqrt_one_plus_minus_one(x) ==
        doctest::Approx(1 / std::sqrt(1 + x) - 1).epsilon(1e-15));
  // small x: the direct form would have lost every digit
  CHECK(inverse_sqrt_one_plus_minus_one(1e-20) == doctest::Approx(-0.5e-20).epsilon(1e-15));

  std::mt19937 rng(21);
  std::uniform_real_distribution<double> log_x(-12, 0);
  for (int i = 0; i < 500; ++i) {
    const double xi = std::pow(10.0, log_x(rng));
    const big exact = 1 / sqrt(1 + big(xi)) - 1;
    CHECK(inverse_sqrt_one_plus_minus_one(xi) ==
          doctest::Approx(exact.convert_to<double>()).epsilon(1e-15));
  }
}
