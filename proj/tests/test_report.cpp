#include <cmath>
#include <cstdlib>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "cavbal/report.hpp"

using namespace cavbal;
using nlohmann::json;

namespace {
CavitySpec cavity_m(double m) {
  return CavitySpec(make_quantity(m, dims::length, UnitSystem::si));
}
}  // namespace

TEST_CASE("format_double round-trips every value bit-for-bit") {
  for (const double v :
       {1.5527321035085160e-19, 0.1, -3.0, 6.8538919452009435e-3,
        -1.3794773952164188e-28, 1e308, 5e-324, 0.0,
        0.013707783890401887}) {
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("json emission parses and preserves values exactly") {
  Record r;
  r.add("name", std::string("q"));
  r.add("value", 1.5527321035085160e-19);
  r.add("count", static_cast<long long>(42));
  r.add("ok", true);
  r.add("missing", std::monostate{});
  const std::string text = emit_json(r);
  const json parsed = json::parse(text);
  CHECK(parsed["name"] == "q");
  CHECK(parsed["value"].get<double>() == 1.5527321035085160e-19);
  CHECK(parsed["count"] == 42);
  CHECK(parsed["ok"] == true);
  CHECK(parsed["missing"].is_null());

  // identical input, identical bytes
  CHECK(emit_json(r) == text);
}

TEST_CASE("casimir record carries the pinned csv schema") {
  const CavitySpec cavity = cavity_m(1.0);
  const CasimirResult result = casimir_energy(cavity, Route::three_d);
  const std::string csv = emit_csv({to_record(result, cavity)});
  CHECK(csv.substr(0, csv.find('\n')) ==
        "route,diameter,energy,pressure,series_coefficient,zeta4");

  // the 1d route has no pressure: null in json, empty cell in csv
  const CasimirResult one = casimir_energy(cavity, Route::one_d);
  const json j = json::parse(emit_json(to_record(one, cavity)));
  CHECK(j["pressure"].is_null());
  const std::string csv1 = emit_csv({to_record(one, cavity)});
  CHECK(csv1.find("1d,1,") != std::string::npos);
}

TEST_CASE("balance record carries the pinned json keys") {
  const json j =
      json::parse(emit_json(to_record(balance_charge(cavity_m(1.0)))));
  for (const char* key :
       {"charge_gaussian", "charge_si", "alpha", "alpha_inverse", "alpha_exp",
        "discrepancy_a", "discrepancy_b"}) {
    CHECK(j.contains(key));
  }
  CHECK(j.size() == 7);
  CHECK(j["alpha_inverse"].get<double>() ==
        1.0 / j["alpha"].get<double>());
}

TEST_CASE("round-trip: parsed json reproduces the in-memory result") {
  const BalanceResult r = balance_charge(cavity_m(1.0));
  const json j = json::parse(emit_json(to_record(r)));
  CHECK(j["charge_gaussian"].get<double>() == r.charge_gaussian.value);
  CHECK(j["charge_si"].get<double>() == r.charge_si.value);
  CHECK(j["alpha"].get<double>() == r.alpha);
  CHECK(j["discrepancy_a"].get<double>() == r.discrepancy_a);
  CHECK(j["discrepancy_b"].get<double>() == r.discrepancy_b);
}

TEST_CASE("constants records") {
  const std::vector<Record> rows = constants_records();
  const json j = json::parse(emit_json(rows));
  CHECK(j.is_array());
  bool saw_c = false;
  for (const auto& row : j) {
    CHECK(row.contains("name"));
    CHECK(row.contains("value"));
    CHECK(row.contains("unit"));
    CHECK(row.contains("system"));
    if (row["name"] == "c" && row["system"] == "si") {
      CHECK(row["value"].get<double>() == 2.997924562e8);
      CHECK(row["unit"] == "m/s");
      saw_c = true;
    }
  }
  CHECK(saw_c);
}

TEST_CASE("moments record schema") {
  const json j = json::parse(emit_json(moments_record(Kernel::j0, 0.5, 1, true)));
  for (const char* key : {"kernel", "eps", "xi", "closed_form", "quadrature",
                          "limit"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["kernel"] == "j0");
  // lambda = 0: no quadrature requested, limit is null (divergent mode)
  const json j0 =
      json::parse(emit_json(moments_record(Kernel::cosine, 1.0, 0, false)));
  CHECK_FALSE(j0.contains("quadrature"));
  CHECK(j0["limit"].is_null());
}

TEST_CASE("sweep records demonstrate size independence") {
  const std::vector<Record> rows = sweep_records(
      {make_quantity(1e-9, dims::length, UnitSystem::si),
       make_quantity(1.0, dims::length, UnitSystem::si)});
  REQUIRE(rows.size() == 2);
  const json a = json::parse(emit_json(rows[0]));
  const json b = json::parse(emit_json(rows[1]));
  CHECK(a["charge_si"].get<double>() == b["charge_si"].get<double>());
  CHECK(a["diameter"].get<double>() == 1e-9);
}

TEST_CASE("table output is aligned and complete") {
  const std::vector<Record> rows = constants_records();
  const std::string table = emit_table(rows);
  CHECK(table.find("esu_per_coulomb") != std::string::npos);
  CHECK(table.find("name") != std::string::npos);

  const std::string single =
      emit_table({to_record(balance_charge(cavity_m(1.0)))});
  CHECK(single.find("charge_si") != std::string::npos);
}
