#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cavbal/casimir.hpp"
#include "cavbal/electro.hpp"
#include "cavbal/moments.hpp"
#include "cavbal/poisson_sum.hpp"

namespace cavbal {

enum class Format { json, csv, table };

// Null renders as JSON null / empty CSV cell.
using Value = std::variant<std::monostate, double, long long, bool,
                           std::string>;

// Ordered field list; field order is the output order everywhere.
struct Record {
  std::vector<std::pair<std::string, Value>> fields;

  void add(std::string name, Value v) {
    fields.emplace_back(std::move(name), std::move(v));
  }
};

// Doubles are printed with 17 significant digits so every emitted value
// re-parses to the identical bit pattern.
std::string format_double(double v);

std::string emit_json(const Record& record);
std::string emit_json(const std::vector<Record>& records);  // array
std::string emit_csv(const std::vector<Record>& records);
std::string emit_table(const std::vector<Record>& records);
std::string emit_report(const std::vector<Record>& records, Format format);

// Record builders; these fix the output schemas.
std::vector<Record> constants_records();
Record to_record(const SumCheckReport& report, SummandFamily family,
                 double param);
// include_quadrature adds the oracle column; lambda = 0 leaves the
// (divergent) limit field null.
Record moments_record(Kernel kernel, double eps, long lambda,
                      bool include_quadrature,
                      const QuadratureSpec& spec = {});
Record to_record(const CasimirResult& result, const CavitySpec& cavity);
Record to_record(const BalanceResult& result);
std::vector<Record> sweep_records(const std::vector<Quantity>& diameters);

}  // namespace cavbal
