#pragma once

#include <string>

namespace cavbal {

enum class UnitSystem { gaussian, si };

// Physical dimension as exponents of (mass, length, time, charge).
//
// Exponents are stored doubled (denominator 2) so that the Gaussian charge
// dimension g^(1/2) cm^(3/2) s^(-1) stays in exact integer arithmetic.
// In SI the charge axis is an independent base dimension; in Gaussian
// units charge has no axis of its own and the half-integer mechanical
// exponents carry it.
class Dimension {
 public:
  constexpr Dimension() = default;

  static constexpr Dimension from_exponents(int mass, int length, int time,
                                            int charge) {
    return Dimension(2 * mass, 2 * length, 2 * time, 2 * charge);
  }
  // Arguments are twice the exponent, e.g. Gaussian charge = (1, 3, -2, 0).
  static constexpr Dimension from_half_exponents(int mass2, int length2,
                                                 int time2, int charge2) {
    return Dimension(mass2, length2, time2, charge2);
  }

  constexpr double mass_exp() const { return mass2_ / 2.0; }
  constexpr double length_exp() const { return length2_ / 2.0; }
  constexpr double time_exp() const { return time2_ / 2.0; }
  constexpr double charge_exp() const { return charge2_ / 2.0; }

  constexpr int half_mass() const { return mass2_; }
  constexpr int half_length() const { return length2_; }
  constexpr int half_time() const { return time2_; }
  constexpr int half_charge() const { return charge2_; }

  // All exponents integer (no half powers).
  constexpr bool is_integer() const {
    return mass2_ % 2 == 0 && length2_ % 2 == 0 && time2_ % 2 == 0 &&
           charge2_ % 2 == 0;
  }
  constexpr bool is_dimensionless() const {
    return mass2_ == 0 && length2_ == 0 && time2_ == 0 && charge2_ == 0;
  }
  // Square root halves every exponent; requires them all even in
  // half-units (i.e. integer exponents).
  constexpr bool has_sqrt() const { return is_integer(); }
  constexpr Dimension sqrt() const {
    return Dimension(mass2_ / 2, length2_ / 2, time2_ / 2, charge2_ / 2);
  }
  constexpr Dimension pow(int n) const {
    return Dimension(mass2_ * n, length2_ * n, time2_ * n, charge2_ * n);
  }

  friend constexpr Dimension operator*(Dimension a, Dimension b) {
    return Dimension(a.mass2_ + b.mass2_, a.length2_ + b.length2_,
                     a.time2_ + b.time2_, a.charge2_ + b.charge2_);
  }
  friend constexpr Dimension operator/(Dimension a, Dimension b) {
    return Dimension(a.mass2_ - b.mass2_, a.length2_ - b.length2_,
                     a.time2_ - b.time2_, a.charge2_ - b.charge2_);
  }
  friend constexpr bool operator==(Dimension a, Dimension b) {
    return a.mass2_ == b.mass2_ && a.length2_ == b.length2_ &&
           a.time2_ == b.time2_ && a.charge2_ == b.charge2_;
  }

  std::string str() const;

 private:
  constexpr Dimension(int m2, int l2, int t2, int q2)
      : mass2_(m2), length2_(l2), time2_(t2), charge2_(q2) {}

  int mass2_ = 0;
  int length2_ = 0;
  int time2_ = 0;
  int charge2_ = 0;
};

namespace dims {
inline constexpr Dimension dimensionless = Dimension::from_exponents(0, 0, 0, 0);
inline constexpr Dimension mass = Dimension::from_exponents(1, 0, 0, 0);
inline constexpr Dimension length = Dimension::from_exponents(0, 1, 0, 0);
inline constexpr Dimension time = Dimension::from_exponents(0, 0, 1, 0);
inline constexpr Dimension velocity = Dimension::from_exponents(0, 1, -1, 0);
inline constexpr Dimension energy = Dimension::from_exponents(1, 2, -2, 0);
inline constexpr Dimension pressure = Dimension::from_exponents(1, -1, -2, 0);
inline constexpr Dimension action = Dimension::from_exponents(1, 2, -1, 0);
inline constexpr Dimension energy_length = Dimension::from_exponents(1, 3, -2, 0);
inline constexpr Dimension charge_si = Dimension::from_exponents(0, 0, 0, 1);
inline constexpr Dimension charge_gaussian =
    Dimension::from_half_exponents(1, 3, -2, 0);
// statvolt/cm = esu/cm^2
inline constexpr Dimension efield_gaussian =
    Dimension::from_half_exponents(1, -1, -2, 0);
}  // namespace dims

// A numeric value tagged with its dimension and unit system.
// Addition requires equal dimension and system; multiplication and
// division require equal system and combine dimensions exactly.
struct Quantity {
  double value = 0.0;
  Dimension dimension;
  UnitSystem system = UnitSystem::si;

  std::string str() const;
};

Quantity make_quantity(double value, Dimension dimension, UnitSystem system);

Quantity operator+(const Quantity& a, const Quantity& b);
Quantity operator-(const Quantity& a, const Quantity& b);
Quantity operator*(const Quantity& a, const Quantity& b);
Quantity operator/(const Quantity& a, const Quantity& b);
Quantity operator*(double s, const Quantity& q);
Quantity operator*(const Quantity& q, double s);
Quantity operator/(const Quantity& q, double s);
Quantity operator-(const Quantity& q);
Quantity sqrt(const Quantity& q);

// Converts between Gaussian and SI. Supported dimensions: purely
// mechanical (integer mass/length/time exponents, no charge) and pure
// charge (C <-> esu). Anything else has no unique counterpart across the
// two systems and is rejected.
Quantity convert(const Quantity& q, UnitSystem target);

// Display unit for a dimension in a given system ("J", "erg*cm", ...),
// or a composed base-unit string when no conventional name applies.
std::string unit_name(Dimension d, UnitSystem system);

// Constants pinned to the values used throughout this project (not kept
// in sync with later CODATA adjustments; reproducing the published
// numbers is part of the test contract).
struct ConstantsTable {
  Quantity c;              // speed of light, SI
  Quantity h;              // Planck constant, SI
  Quantity hbar;           // h / 2*pi, SI
  Quantity e_exp;          // experimental unit charge, SI
  double esu_per_coulomb;  // = c[cm/s] / 10
};

const ConstantsTable& constants();

// hbar*c in the requested system (J*m or erg*cm).
Quantity hbar_c(UnitSystem system);

}  // namespace cavbal
