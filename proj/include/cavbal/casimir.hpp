#pragma once

#include <optional>

#include "cavbal/units.hpp"

namespace cavbal {

// Spherical cavity, identified by its diameter.
struct CavitySpec {
  Quantity diameter;

  explicit CavitySpec(const Quantity& d);
};

// Which summation route assembled the result. The two routes differ by
// the kernel that survives the angular treatment: the full
// three-dimensional reduction leaves j0 and a negative energy, the
// one-dimensional shortcut leaves cos and a positive one.
enum class Route { three_d, one_d };

struct CasimirResult {
  Route route;
  Quantity energy;
  // Surface stress; filled for the three_d route only (the derivative is
  // taken on that route's energy).
  std::optional<Quantity> pressure;
  // Dimensionless multiple of hbar*c/a: -zeta(4)/(8 pi^2) or
  // +3 zeta(4)/(8 pi^2).
  double series_coefficient = 0.0;
  // series_coefficient = zeta4_multiple * zeta(4) / (8 pi^2); the exact
  // integer factor (-1 or +3) so ratio checks need no rounding slack.
  int zeta4_multiple = 0;
  double zeta4 = 0.0;
};

// zeta(s) for even s >= 2 via the Bernoulli-number closed form
// zeta(2n) = (-1)^(n+1) B_2n (2 pi)^(2n) / (2 (2n)!). The Bernoulli
// table covers s <= 30; beyond that the direct series already converges
// to machine precision in a handful of terms and is used instead.
double zeta_even(int s);

// Partial dimensionless coefficient (pi^2/2) * sum over 0 < |lambda| <=
// lambda_max of the kernel's eps->0 moment limit at xi = 2 pi lambda,
// skipping the flagged free-space index. Converges to the closed
// coefficient with tail O(lambda_max^-3).
double assemble_series(Route route, long lambda_max);

// Relative truncation bound for assemble_series at lambda_max:
// |assembled - closed| <= bound * |closed|, with
// bound = 1 / (3 lambda_max^3 zeta(4)) for either route.
double assembly_tail_bound(long lambda_max);

// Renormalized cavity energy series_coefficient * hbar c / a, reported
// in the cavity's unit system. The closed coefficient is cross-checked
// against the series assembly (with its integral tail estimate) to
// 1e-13 relative on every call.
CasimirResult casimir_energy(const CavitySpec& cavity, Route route);

// Surface stress -pi hbar c / (720 a^4): the a-derivative of the
// three_d energy spread over the sphere area. Self-checked against a
// central finite difference of the energy to 1e-8 relative.
Quantity casimir_pressure(const CavitySpec& cavity);

}  // namespace cavbal
