#include "cavbal/units.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cavbal {

namespace {

std::string exp_str(int half) {
  if (half % 2 == 0) return std::to_string(half / 2);
  return std::to_string(half) + "/2";
}

const char* system_name(UnitSystem s) {
  return s == UnitSystem::si ? "si" : "gaussian";
}

// 10^k, exact for |k| <= 22.
double pow10i(int k) { return std::pow(10.0, k); }

}  // namespace

std::string Dimension::str() const {
  if (is_dimensionless()) return "1";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const char* sym, int half) {
    if (half == 0) return;
    if (!first) os << " ";
    os << sym;
    if (half != 2) os << "^" << exp_str(half);
    first = false;
  };
  emit("M", mass2_);
  emit("L", length2_);
  emit("T", time2_);
  emit("Q", charge2_);
  return os.str();
}

Quantity make_quantity(double value, Dimension dimension, UnitSystem system) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("make_quantity: value is not finite");
  }
  return Quantity{value, dimension, system};
}

static void require_same_dim(const Quantity& a, const Quantity& b,
                             const char* op) {
  if (!(a.dimension == b.dimension)) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                a.dimension.str() + " vs " +
                                b.dimension.str() + ")");
  }
}

static void require_same_system(const Quantity& a, const Quantity& b,
                                const char* op) {
  if (a.system != b.system) {
    throw std::invalid_argument(std::string(op) + ": unit-system mismatch (" +
                                system_name(a.system) + " vs " +
                                system_name(b.system) + ")");
  }
}

Quantity operator+(const Quantity& a, const Quantity& b) {
  require_same_dim(a, b, "add");
  require_same_system(a, b, "add");
  return Quantity{a.value + b.value, a.dimension, a.system};
}

Quantity operator-(const Quantity& a, const Quantity& b) {
  require_same_dim(a, b, "subtract");
  require_same_system(a, b, "subtract");
  return Quantity{a.value - b.value, a.dimension, a.system};
}

Quantity operator*(const Quantity& a, const Quantity& b) {
  require_same_system(a, b, "multiply");
  return Quantity{a.value * b.value, a.dimension * b.dimension, a.system};
}

Quantity operator/(const Quantity& a, const Quantity& b) {
  require_same_system(a, b, "divide");
  return Quantity{a.value / b.value, a.dimension / b.dimension, a.system};
}

Quantity operator*(double s, const Quantity& q) {
  return Quantity{s * q.value, q.dimension, q.system};
}
Quantity operator*(const Quantity& q, double s) { return s * q; }
Quantity operator/(const Quantity& q, double s) {
  return Quantity{q.value / s, q.dimension, q.system};
}
Quantity operator-(const Quantity& q) {
  return Quantity{-q.value, q.dimension, q.system};
}

Quantity sqrt(const Quantity& q) {
  if (!q.dimension.has_sqrt()) {
    throw std::invalid_argument("sqrt: dimension " + q.dimension.str() +
                                " has half-integer square root");
  }
  if (q.value < 0) {
    throw std::domain_error("sqrt: negative quantity");
  }
  return Quantity{std::sqrt(q.value), q.dimension.sqrt(), q.system};
}

Quantity convert(const Quantity& q, UnitSystem target) {
  if (q.system == target) return q;

  const bool to_gaussian = (target == UnitSystem::gaussian);

  // Pure charge: 1 C = (c / 10) esu with c in cm/s.
  const Dimension charge_src = q.system == UnitSystem::si
                                   ? dims::charge_si
                                   : dims::charge_gaussian;
  if (q.dimension == charge_src) {
    const double k = constants().esu_per_coulomb;
    return Quantity{to_gaussian ? q.value * k : q.value / k,
                    to_gaussian ? dims::charge_gaussian : dims::charge_si,
                    target};
  }

  // Mechanical: kg -> g is 10^3, m -> cm is 10^2, s -> s.
  if (q.dimension.is_integer() && q.dimension.half_charge() == 0) {
    const int m = q.dimension.half_mass() / 2;
    const int l = q.dimension.half_length() / 2;
    const int k = 3 * m + 2 * l;
    const double factor = pow10i(to_gaussian ? k : -k);
    return Quantity{q.value * factor, q.dimension, target};
  }

  throw std::invalid_argument(
      "convert: unsupported dimension " + q.dimension.str() +
      " (only mechanical and pure-charge quantities convert between "
      "gaussian and si)");
}

std::string unit_name(Dimension d, UnitSystem system) {
  const bool si = system == UnitSystem::si;
  if (d == dims::dimensionless) return "";
  if (d == dims::length) return si ? "m" : "cm";
  if (d == dims::mass) return si ? "kg" : "g";
  if (d == dims::time) return "s";
  if (d == dims::velocity) return si ? "m/s" : "cm/s";
  if (d == dims::energy) return si ? "J" : "erg";
  if (d == dims::pressure) return si ? "Pa" : "dyn/cm^2";
  if (d == dims::action) return si ? "J*s" : "erg*s";
  if (d == dims::energy_length) return si ? "J*m" : "erg*cm";
  if (si && d == dims::charge_si) return "C";
  if (!si && d == dims::charge_gaussian) return "esu";
  if (!si && d == dims::efield_gaussian) return "statvolt/cm";

  // No conventional name: compose from base units.
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const char* sym, int half) {
    if (half == 0) return;
    if (!first) os << "*";
    os << sym;
    if (half != 2) os << "^" << exp_str(half);
    first = false;
  };
  emit(si ? "kg" : "g", d.half_mass());
  emit(si ? "m" : "cm", d.half_length());
  emit("s", d.half_time());
  emit(si ? "C" : "esu", d.half_charge());
  return os.str();
}

std::string Quantity::str() const {
  std::ostringstream os;
  os << value;
  const std::string u = unit_name(dimension, system);
  if (!u.empty()) os << " " << u;
  return os.str();
}

const ConstantsTable& constants() {
  static const ConstantsTable table = [] {
    ConstantsTable t;
    t.c = Quantity{2.997924562e8, dims::velocity, UnitSystem::si};
    t.h = Quantity{6.6260755e-34, dims::action, UnitSystem::si};
    t.hbar = Quantity{t.h.value / (2.0 * std::numbers::pi), dims::action,
                      UnitSystem::si};
    t.e_exp = Quantity{1.60217733e-19, dims::charge_si, UnitSystem::si};
    // c in cm/s divided by 10.
    t.esu_per_coulomb = t.c.value * 100.0 / 10.0;
    return t;
  }();
  return table;
}

Quantity hbar_c(UnitSystem system) {
  const ConstantsTable& k = constants();
  const Quantity si = k.hbar * k.c;
  return system == UnitSystem::si ? si : convert(si, UnitSystem::gaussian);
}

}  // namespace cavbal
