#include <cmath>
#include <numbers>

#include <doctest.h>

#include "cavbal/electro.hpp"
#include "cavbal/errors.hpp"

using namespace cavbal;

namespace {
constexpr double kPi = std::numbers::pi;

bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

Quantity esu(double value) {
  return make_quantity(value, dims::charge_gaussian, UnitSystem::gaussian);
}

CavitySpec cavity_cm(double cm) {
  return CavitySpec(make_quantity(cm, dims::length, UnitSystem::gaussian));
}

CavitySpec cavity_m(double m) {
  return CavitySpec(make_quantity(m, dims::length, UnitSystem::si));
}
}  // namespace

TEST_CASE("surface field by Gauss's law") {
  CHECK(surface_field(esu(1.0), cavity_cm(2.0)).value == 1.0);
  CHECK(surface_field(esu(1.0), cavity_cm(2.0)).dimension ==
        dims::efield_gaussian);
  CHECK(surface_field(esu(0.0), cavity_cm(3.0)).value == 0.0);
  // doubling the diameter quarters the field
  const double e1 = surface_field(esu(2.5), cavity_cm(1.5)).value;
  const double e2 = surface_field(esu(2.5), cavity_cm(3.0)).value;
  CHECK(rel_close(e1, 4.0 * e2, 1e-15));
}

TEST_CASE("gaussian-only preconditions") {
  const Quantity q_si = make_quantity(1.0, dims::charge_si, UnitSystem::si);
  CHECK_THROWS_AS(surface_field(q_si, cavity_cm(1.0)), std::invalid_argument);
  CHECK_THROWS_AS(surface_field(esu(1.0), cavity_m(1.0)),
                  std::invalid_argument);
  const Quantity not_charge =
      make_quantity(1.0, dims::energy, UnitSystem::gaussian);
  CHECK_THROWS_AS(surface_field(not_charge, cavity_cm(1.0)),
                  std::invalid_argument);
}

TEST_CASE("electrostatic stress") {
  // E_n = sqrt(8 pi) gives unit stress; arrange Q = sqrt(8 pi)/4 at a = 1
  const double q = std::sqrt(8.0 * kPi) / 4.0;
  CHECK(rel_close(electrostatic_stress(esu(q), cavity_cm(1.0)).value, 1.0,
                  1e-15));

  // direct formula cross-check: 2 Q^2 / (pi a^4)
  const Quantity stress = electrostatic_stress(esu(1.0), cavity_cm(1.0));
  CHECK(rel_close(stress.value, 2.0 / kPi, 1e-15));
  CHECK(rel_close(stress.value, 0.63661977236758134, 1e-15));
  CHECK(stress.value > 0.0);

  // same dimension as the vacuum stress: the balance is meaningful
  CHECK(stress.dimension == casimir_pressure(cavity_cm(1.0)).dimension);
}

TEST_CASE("balance charge, closed form") {
  const BalanceResult r = balance_charge(cavity_m(1.0));
  CHECK(rel_close(r.charge_gaussian.value, 4.6549737113141064e-10, 1e-12));
  CHECK(r.charge_gaussian.dimension == dims::charge_gaussian);
  CHECK(rel_close(r.charge_si.value, 1.5527321035085160e-19, 1e-12));
  CHECK(r.charge_si.dimension == dims::charge_si);
  // published rounding: 1.55e-19 C to three significant figures
  CHECK(std::abs(r.charge_si.value - 1.55e-19) <= 0.005e-19);
}

TEST_CASE("balance charge is independent of the cavity size") {
  const BalanceResult ref = balance_charge(cavity_m(1.0));
  for (const double a : {1e-9, 1e-6, 1e-3, 1.0, 1e3}) {
    const BalanceResult r = balance_charge(cavity_m(a));
    CHECK(rel_close(r.charge_gaussian.value, ref.charge_gaussian.value,
                    1e-12));
    // the numeric root re-solves the balance at this size
    CHECK(rel_close(balance_charge_numeric(cavity_m(a)).value,
                    ref.charge_gaussian.value, 1e-12));
  }
}

TEST_CASE("the balance residual vanishes at the returned charge") {
  for (const double a : {1e-9, 1e-3, 1.0, 1e3}) {
    const CavitySpec cav = cavity_cm(a);
    const BalanceResult r = balance_charge(cav);
    const double p_c = casimir_pressure(cav).value;
    const double p_e = electrostatic_stress(r.charge_gaussian, cav).value;
    CHECK(std::abs(p_c + p_e) <= 1e-12 * std::abs(p_c));
  }
}

TEST_CASE("fine structure constant") {
  const BalanceResult r = balance_charge(cavity_m(1.0));
  CHECK(r.alpha == kPi * kPi / 1440.0);  // symbolic construction
  CHECK(r.alpha * 1440.0 / (kPi * kPi) == 1.0);
  CHECK(rel_close(r.alpha, 6.8538919452009435e-3, 1e-15));
  CHECK(rel_close(1.0 / r.alpha, 145.90250444496639, 1e-15));
  // the numeric route Q^2/(hbar c) agrees to 1e-12
  const double alpha_num = fine_structure(r);
  CHECK(rel_close(alpha_num, r.alpha, 1e-12));
}

TEST_CASE("comparison with the measured value") {
  const BalanceResult r = balance_charge(cavity_m(1.0));
  CHECK(r.alpha_exp == 1.0 / 137.035987);
  CHECK(r.alpha_exp == alpha_experimental());
  CHECK(rel_close(r.discrepancy_a, 0.060770152, 1e-7));
  CHECK(rel_close(r.discrepancy_b, 0.064702110, 1e-7));
  // the stated "6%" holds under the first convention
  CHECK(std::lround(r.discrepancy_a * 100.0) == 6);
}
