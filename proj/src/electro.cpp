#include "cavbal/electro.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cavbal/errors.hpp"

namespace cavbal {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBisectionHiEsu = 1e-8;
constexpr double kBisectionRelTol = 1e-15;
constexpr double kSelfCheckRelTol = 1e-12;

void require_gaussian(const Quantity& q, const char* who) {
  if (q.system != UnitSystem::gaussian) {
    throw std::invalid_argument(std::string(who) +
                                ": expects gaussian units; convert first");
  }
}

CavitySpec gaussian_cavity(const CavitySpec& cavity) {
  return CavitySpec(convert(cavity.diameter, UnitSystem::gaussian));
}

}  // namespace

Quantity surface_field(const Quantity& charge, const CavitySpec& cavity) {
  require_gaussian(charge, "surface_field");
  require_gaussian(cavity.diameter, "surface_field");
  if (!(charge.dimension == dims::charge_gaussian)) {
    throw std::invalid_argument("surface_field: charge has dimension " +
                                charge.dimension.str());
  }
  return 4.0 * charge / (cavity.diameter * cavity.diameter);
}

Quantity electrostatic_stress(const Quantity& charge,
                              const CavitySpec& cavity) {
  const Quantity e_n = surface_field(charge, cavity);
  return e_n * e_n / (8.0 * kPi);
}

Quantity balance_charge_numeric(const CavitySpec& cavity) {
  const CavitySpec cav = gaussian_cavity(cavity);
  const double p_c = casimir_pressure(cav).value;

  auto residual = [&](double q_esu) {
    const Quantity q{q_esu, dims::charge_gaussian, UnitSystem::gaussian};
    return p_c + electrostatic_stress(q, cav).value;
  };

  double lo = 0.0;
  double hi = kBisectionHiEsu;
  if (!(residual(lo) < 0.0 && residual(hi) > 0.0)) {
    throw numeric_error("balance_charge_numeric: root not bracketed");
  }
  for (int it = 0; it < 200 && (hi - lo) > kBisectionRelTol * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (residual(mid) < 0.0 ? lo : hi) = mid;
  }
  return Quantity{0.5 * (lo + hi), dims::charge_gaussian,
                  UnitSystem::gaussian};
}

BalanceResult balance_charge(const CavitySpec& cavity) {
  const CavitySpec cav = gaussian_cavity(cavity);

  // Closed form: 2 Q^2 / (pi a^4) = pi hbar c / (720 a^4), the a^4
  // cancels, Q = sqrt(pi^2 hbar c / 1440).
  const Quantity hc = hbar_c(UnitSystem::gaussian);
  const Quantity q_sym = sqrt(kPi * kPi / 1440.0 * hc);

  // The two stresses must be commensurable before their values are
  // compared at all.
  const Quantity p_c = casimir_pressure(cav);
  const Quantity p_e = electrostatic_stress(q_sym, cav);
  if (!(p_c.dimension == p_e.dimension)) {
    throw numeric_error(
        "balance_charge: stress dimensions differ (" + p_c.dimension.str() +
        " vs " + p_e.dimension.str() + ")");
  }

  // Residual of the balance at the closed-form charge.
  if (!(std::abs(p_c.value + p_e.value) <=
        kSelfCheckRelTol * std::abs(p_c.value))) {
    throw numeric_error("balance_charge: stress balance residual above " +
                        std::to_string(kSelfCheckRelTol) + " relative");
  }

  // Independent numeric route through the stress operations end to end.
  const Quantity q_num = balance_charge_numeric(cav);
  if (!(std::abs(q_num.value - q_sym.value) <=
        kSelfCheckRelTol * q_sym.value)) {
    throw numeric_error(
        "balance_charge: numeric root disagrees with the closed form");
  }

  BalanceResult result;
  result.charge_gaussian = q_sym;
  result.charge_si = convert(q_sym, UnitSystem::si);
  result.alpha = kPi * kPi / 1440.0;
  result.alpha_exp = alpha_experimental();
  result.discrepancy_a =
      std::abs(result.alpha - result.alpha_exp) / result.alpha_exp;
  result.discrepancy_b = std::abs(1.0 / result.alpha - 1.0 / result.alpha_exp) /
                         (1.0 / result.alpha_exp);
  return result;
}

double fine_structure(const BalanceResult& result) {
  const Quantity q = result.charge_gaussian;
  require_gaussian(q, "fine_structure");
  const Quantity alpha_q = q * q / hbar_c(UnitSystem::gaussian);
  if (!alpha_q.dimension.is_dimensionless()) {
    throw numeric_error("fine_structure: Q^2/(hbar c) is not dimensionless");
  }
  const double symbolic = kPi * kPi / 1440.0;
  if (!(std::abs(alpha_q.value - symbolic) <= kSelfCheckRelTol * symbolic)) {
    throw numeric_error(
        "fine_structure: Q^2/(hbar c) deviates from pi^2/1440");
  }
  return alpha_q.value;
}

double alpha_experimental() { return 1.0 / 137.035987; }

}  // namespace cavbal
