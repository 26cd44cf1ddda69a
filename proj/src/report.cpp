#include "cavbal/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cavbal {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string value_json(const Value& v) {
  if (std::holds_alternative<std::monostate>(v)) return "null";
  if (const auto* d = std::get_if<double>(&v)) return format_double(*d);
  if (const auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return "\"" + json_escape(std::get<std::string>(v)) + "\"";
}

std::string value_text(const Value& v) {
  if (std::holds_alternative<std::monostate>(v)) return "";
  if (const auto* d = std::get_if<double>(&v)) return format_double(*d);
  if (const auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return std::get<std::string>(v);
}

std::string record_json(const Record& r) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, value] : r.fields) {
    if (!first) out += ",";
    out += "\"" + json_escape(name) + "\":" + value_json(value);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string emit_json(const Record& record) {
  return record_json(record) + "\n";
}

std::string emit_json(const std::vector<Record>& records) {
  std::string out = "[";
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i) out += ",";
    out += record_json(records[i]);
  }
  return out + "]\n";
}

std::string emit_csv(const std::vector<Record>& records) {
  if (records.empty()) return "";
  std::string out;
  for (std::size_t i = 0; i < records[0].fields.size(); ++i) {
    if (i) out += ",";
    out += records[0].fields[i].first;
  }
  out += "\n";
  for (const Record& r : records) {
    for (std::size_t i = 0; i < r.fields.size(); ++i) {
      if (i) out += ",";
      out += value_text(r.fields[i].second);
    }
    out += "\n";
  }
  return out;
}

std::string emit_table(const std::vector<Record>& records) {
  if (records.empty()) return "";
  // Single record: name/value pairs down the page. Several records:
  // header row plus one row each.
  std::ostringstream os;
  if (records.size() == 1) {
    std::size_t width = 0;
    for (const auto& [name, _] : records[0].fields) {
      width = std::max(width, name.size());
    }
    for (const auto& [name, value] : records[0].fields) {
      os << name << std::string(width - name.size() + 2, ' ')
         << value_text(value) << "\n";
    }
    return os.str();
  }

  const std::size_t cols = records[0].fields.size();
  std::vector<std::size_t> width(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    width[c] = records[0].fields[c].first.size();
    for (const Record& r : records) {
      width[c] = std::max(width[c], value_text(r.fields[c].second).size());
    }
  }
  auto row = [&](auto&& cell) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string text = cell(c);
      os << text;
      if (c + 1 < cols) os << std::string(width[c] - text.size() + 2, ' ');
    }
    os << "\n";
  };
  row([&](std::size_t c) { return records[0].fields[c].first; });
  for (const Record& r : records) {
    row([&](std::size_t c) { return value_text(r.fields[c].second); });
  }
  return os.str();
}

std::string emit_report(const std::vector<Record>& records, Format format) {
  switch (format) {
    case Format::json:
      return records.size() == 1 ? emit_json(records[0]) : emit_json(records);
    case Format::csv:
      return emit_csv(records);
    case Format::table:
      return emit_table(records);
  }
  throw std::invalid_argument("emit_report: unknown format");
}

std::vector<Record> constants_records() {
  const ConstantsTable& k = constants();
  std::vector<Record> out;
  auto push = [&](const std::string& name, const Quantity& q) {
    Record r;
    r.add("name", name);
    r.add("value", q.value);
    r.add("unit", unit_name(q.dimension, q.system));
    r.add("system", std::string(q.system == UnitSystem::si ? "si" : "gaussian"));
    out.push_back(std::move(r));
  };
  push("c", k.c);
  push("c", convert(k.c, UnitSystem::gaussian));
  push("h", k.h);
  push("h", convert(k.h, UnitSystem::gaussian));
  push("hbar", k.hbar);
  push("hbar", convert(k.hbar, UnitSystem::gaussian));
  push("hbar_c", hbar_c(UnitSystem::si));
  push("hbar_c", hbar_c(UnitSystem::gaussian));
  push("e_exp", k.e_exp);
  push("e_exp", convert(k.e_exp, UnitSystem::gaussian));
  Record r;
  r.add("name", std::string("esu_per_coulomb"));
  r.add("value", k.esu_per_coulomb);
  r.add("unit", std::string("esu/C"));
  r.add("system", std::string(""));
  out.push_back(std::move(r));
  return out;
}

Record to_record(const SumCheckReport& report, SummandFamily family,
                 double param) {
  Record r;
  r.add("family", std::string(family == SummandFamily::gaussian
                                  ? "gaussian"
                                  : "lorentzian"));
  if (family == SummandFamily::lorentzian) {
    r.add("beta", param);
  }
  r.add("lhs_value", report.lhs_value);
  r.add("rhs_value", report.rhs_value);
  r.add("truncation_n", static_cast<long long>(report.truncation_n));
  r.add("abs_diff", report.abs_diff);
  r.add("tolerance", report.tolerance);
  r.add("converged", report.converged);
  return r;
}

Record moments_record(Kernel kernel, double eps, long lambda,
                      bool include_quadrature, const QuadratureSpec& spec) {
  const double xi = 2.0 * 3.14159265358979323846 * static_cast<double>(lambda);
  Record r;
  r.add("kernel", std::string(kernel == Kernel::j0 ? "j0" : "cosine"));
  r.add("eps", eps);
  r.add("xi", xi);
  r.add("closed_form", moment_closed_form(kernel, eps, xi));
  if (include_quadrature) {
    r.add("quadrature", moment_quadrature(kernel, eps, xi, spec));
  }
  if (lambda != 0) {
    r.add("limit", limit_eps_zero(kernel, xi));
  } else {
    r.add("limit", std::monostate{});
  }
  return r;
}

Record to_record(const CasimirResult& result, const CavitySpec& cavity) {
  Record r;
  r.add("route",
        std::string(result.route == Route::three_d ? "3d" : "1d"));
  r.add("diameter", convert(cavity.diameter, UnitSystem::si).value);
  r.add("energy", result.energy.value);
  if (result.pressure) {
    r.add("pressure", result.pressure->value);
  } else {
    r.add("pressure", std::monostate{});
  }
  r.add("series_coefficient", result.series_coefficient);
  r.add("zeta4", result.zeta4);
  return r;
}

Record to_record(const BalanceResult& result) {
  Record r;
  r.add("charge_gaussian", result.charge_gaussian.value);
  r.add("charge_si", result.charge_si.value);
  r.add("alpha", result.alpha);
  r.add("alpha_inverse", 1.0 / result.alpha);
  r.add("alpha_exp", result.alpha_exp);
  r.add("discrepancy_a", result.discrepancy_a);
  r.add("discrepancy_b", result.discrepancy_b);
  return r;
}

std::vector<Record> sweep_records(const std::vector<Quantity>& diameters) {
  std::vector<Record> out;
  for (const Quantity& d : diameters) {
    const CavitySpec cavity(d);
    const BalanceResult b = balance_charge(cavity);
    Record r;
    r.add("diameter", convert(d, UnitSystem::si).value);
    r.add("charge_gaussian", b.charge_gaussian.value);
    r.add("charge_si", b.charge_si.value);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace cavbal
