#pragma once

#include "cavbal/casimir.hpp"
#include "cavbal/units.hpp"

namespace cavbal {

// Outcome of the stress balance on the cavity surface. The charge is the
// one whose outward electrostatic stress cancels the inward vacuum
// stress; it carries no dependence on the cavity size.
struct BalanceResult {
  Quantity charge_gaussian;  // esu
  Quantity charge_si;        // Coulomb
  double alpha = 0.0;        // pi^2/1440, constructed symbolically
  double alpha_exp = 0.0;    // 1/137.035987
  double discrepancy_a = 0.0;  // |alpha - alpha_exp| / alpha_exp
  double discrepancy_b = 0.0;  // same ratio on the reciprocals
};

// Normal electric field at the surface of a sphere of diameter a
// carrying charge Q, by Gauss's law: E_n = 4 Q / a^2. Gaussian-unit
// inputs only; convert first.
Quantity surface_field(const Quantity& charge, const CavitySpec& cavity);

// Outward surface stress E_n^2 / (8 pi) = 2 Q^2 / (pi a^4).
Quantity electrostatic_stress(const Quantity& charge,
                              const CavitySpec& cavity);

// Root of casimir_pressure(a) + electrostatic_stress(Q, a) = 0 by
// bisection on Q in [0, 1e-8 esu] to 1e-15 relative. Exists as the
// independent numeric route; balance_charge checks itself against it.
Quantity balance_charge_numeric(const CavitySpec& cavity);

// Solves the stress balance. Primary route is the closed form
// Q = sqrt(pi^2 hbar c / 1440) in esu; the numeric root and the residual
// of the balance are verified on every call, and the two stresses must
// agree in dimension before any value is compared.
BalanceResult balance_charge(const CavitySpec& cavity);

// alpha = Q^2 / (hbar c) in Gaussian units, verified against pi^2/1440
// to 1e-12 relative.
double fine_structure(const BalanceResult& result);

// Experimental fine-structure constant pinned to 1/137.035987.
double alpha_experimental();

}  // namespace cavbal
