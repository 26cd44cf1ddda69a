// cavbal: regularized vacuum-mode sums for a spherical cavity, the
// surface stress balance, and the equilibrium charge it implies.
//
// Exit codes: 0 success, 1 usage/parse error, 2 numeric failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cavbal/casimir.hpp"
#include "cavbal/electro.hpp"
#include "cavbal/errors.hpp"
#include "cavbal/moments.hpp"
#include "cavbal/poisson_sum.hpp"
#include "cavbal/report.hpp"
#include "cavbal/units.hpp"

namespace {

using namespace cavbal;

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "table") return Format::table;
  throw CLI::ValidationError("--format", "expected json, csv or table");
}

// "<value><unit>" with unit in {m, cm, mm, um, nm}; returns an SI length.
Quantity parse_length(const std::string& text) {
  static const std::map<std::string, double, std::greater<>> scale = {
      {"cm", 1e-2}, {"mm", 1e-3}, {"um", 1e-6}, {"nm", 1e-9}, {"m", 1.0},
  };
  for (const auto& [unit, factor] : scale) {
    if (text.size() > unit.size() &&
        text.compare(text.size() - unit.size(), unit.size(), unit) == 0) {
      const std::string number = text.substr(0, text.size() - unit.size());
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(number, &used);
      } catch (const std::exception&) {
        break;
      }
      if (used != number.size()) break;
      return make_quantity(v * factor, dims::length, UnitSystem::si);
    }
  }
  throw CLI::ValidationError(
      "length", "'" + text + "' is not <value><unit> with unit m|cm|mm|um|nm");
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cavbal: cannot open output path '" << path << "'\n";
    return 1;
  }
  out << text;
  if (!out.good()) {
    std::cerr << "cavbal: failed writing to '" << path << "'\n";
    return 1;
  }
  return 0;
}

struct CommonOpts {
  std::string format = "table";
  std::string output;

  void attach(CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: json, csv or table")
        ->default_val("table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    cmd->add_option("--output", output, "Write the report to this path");
  }
};

int run(int argc, char** argv) {
  CLI::App app{
      "Vacuum-mode summation checks, spherical-cavity energies, and the "
      "surface charge that balances the vacuum stress"};
  app.require_subcommand(1);

  CommonOpts constants_opts;
  CLI::App* cmd_constants =
      app.add_subcommand("constants", "Pinned physical constants");
  constants_opts.attach(cmd_constants);

  CommonOpts sum_opts;
  std::string sum_family;
  double sum_beta = 1.0;
  long sum_truncation = 0;
  double sum_tolerance = 0.0;
  CLI::App* cmd_sum = app.add_subcommand(
      "sum-check", "Compare a direct integer sum with its transformed side");
  cmd_sum->add_option("--family", sum_family, "gaussian or lorentzian")
      ->required();
  cmd_sum->add_option("--beta", sum_beta, "Lorentzian width (> 0)");
  cmd_sum->add_option("--truncation", sum_truncation,
                      "Direct-sum bound N (default 6 gaussian, 1e6 "
                      "lorentzian)");
  cmd_sum->add_option("--tolerance", sum_tolerance,
                      "Convergence tolerance on |lhs - rhs|");
  sum_opts.attach(cmd_sum);

  CommonOpts moments_opts;
  std::string moments_kernel;
  double moments_eps = 0.0;
  long moments_lambda = 1;
  bool moments_oracle = false;
  CLI::App* cmd_moments = app.add_subcommand(
      "moments", "Cutoff-regularized third-moment integrals");
  cmd_moments->add_option("--kernel", moments_kernel, "j0 or cosine")
      ->required();
  cmd_moments->add_option("--eps", moments_eps, "Cutoff parameter (> 0)")
      ->required();
  cmd_moments->add_option("--lambda", moments_lambda,
                          "Mode index; xi = 2*pi*lambda");
  cmd_moments->add_flag("--oracle", moments_oracle,
                        "Also run the quadrature cross-check");
  moments_opts.attach(cmd_moments);

  CommonOpts casimir_opts;
  std::string casimir_diameter;
  std::string casimir_route = "3d";
  long casimir_lambda_max = 100;
  CLI::App* cmd_casimir =
      app.add_subcommand("casimir", "Cavity energy and surface stress");
  cmd_casimir
      ->add_option("--diameter", casimir_diameter,
                   "Cavity diameter, e.g. 1m, 2.5um")
      ->required();
  cmd_casimir->add_option("--route", casimir_route, "3d or 1d");
  cmd_casimir->add_option("--lambda-max", casimir_lambda_max,
                          "Verify the series assembly at this truncation");
  casimir_opts.attach(cmd_casimir);

  CommonOpts balance_opts;
  std::string balance_diameter = "1m";
  CLI::App* cmd_balance = app.add_subcommand(
      "balance", "Charge at which the surface stresses cancel");
  cmd_balance->add_option("--diameter", balance_diameter,
                          "Cavity diameter (the result does not depend on "
                          "it)");
  balance_opts.attach(cmd_balance);

  CommonOpts sweep_opts;
  std::string sweep_diameters;
  CLI::App* cmd_sweep = app.add_subcommand(
      "sweep", "Balance charge across a list of diameters");
  cmd_sweep
      ->add_option("--diameters", sweep_diameters,
                   "Comma-separated lengths, e.g. 1e-9m,1um,1m")
      ->required();
  sweep_opts.attach(cmd_sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }

  const CommonOpts* opts = nullptr;
  std::vector<Record> records;
  try {
    if (cmd_constants->parsed()) {
      opts = &constants_opts;
      records = constants_records();
    } else if (cmd_sum->parsed()) {
      opts = &sum_opts;
      SummandFamily family;
      if (sum_family == "gaussian") {
        family = SummandFamily::gaussian;
      } else if (sum_family == "lorentzian") {
        family = SummandFamily::lorentzian;
      } else {
        std::cerr << "cavbal: unknown summand family '" << sum_family
                  << "' (expected gaussian or lorentzian)\n";
        return 1;
      }
      if (sum_truncation == 0) {
        sum_truncation = family == SummandFamily::gaussian ? 6 : 1000000;
      }
      const SumCheckReport report =
          sum_tolerance > 0.0
              ? poisson_check(family, sum_beta, sum_truncation, sum_tolerance)
              : poisson_check(family, sum_beta, sum_truncation);
      records.push_back(to_record(report, family, sum_beta));
    } else if (cmd_moments->parsed()) {
      opts = &moments_opts;
      Kernel kernel;
      if (moments_kernel == "j0") {
        kernel = Kernel::j0;
      } else if (moments_kernel == "cosine") {
        kernel = Kernel::cosine;
      } else {
        std::cerr << "cavbal: unknown kernel '" << moments_kernel
                  << "' (expected j0 or cosine)\n";
        return 1;
      }
      records.push_back(
          moments_record(kernel, moments_eps, moments_lambda, moments_oracle));
    } else if (cmd_casimir->parsed()) {
      opts = &casimir_opts;
      Route route;
      if (casimir_route == "3d") {
        route = Route::three_d;
      } else if (casimir_route == "1d") {
        route = Route::one_d;
      } else {
        std::cerr << "cavbal: unknown route '" << casimir_route
                  << "' (expected 3d or 1d)\n";
        return 1;
      }
      const CavitySpec cavity(parse_length(casimir_diameter));
      const CasimirResult result = casimir_energy(cavity, route);
      const double assembled = assemble_series(route, casimir_lambda_max);
      const double bound = assembly_tail_bound(casimir_lambda_max);
      if (!(std::abs(assembled - result.series_coefficient) <=
            bound * std::abs(result.series_coefficient))) {
        throw numeric_error(
            "casimir: series assembly at lambda_max=" +
            std::to_string(casimir_lambda_max) +
            " fell outside its truncation bound");
      }
      records.push_back(to_record(result, cavity));
    } else if (cmd_balance->parsed()) {
      opts = &balance_opts;
      const CavitySpec cavity(parse_length(balance_diameter));
      records.push_back(to_record(balance_charge(cavity)));
    } else if (cmd_sweep->parsed()) {
      opts = &sweep_opts;
      std::vector<Quantity> diameters;
      std::stringstream ss(sweep_diameters);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) diameters.push_back(parse_length(item));
      }
      if (diameters.empty()) {
        std::cerr << "cavbal: --diameters list is empty\n";
        return 1;
      }
      records = sweep_records(diameters);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "cavbal: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "cavbal: " << e.what() << "\n";
    return 1;
  } catch (const quadrature_error& e) {
    Record err;
    err.add("error", std::string("numeric_failure"));
    err.add("message", std::string(e.what()));
    err.add("error_estimate", e.error_estimate());
    err.add("partial_value", e.partial_value());
    std::cerr << emit_json(err);
    return 2;
  } catch (const numeric_error& e) {
    Record err;
    err.add("error", std::string("numeric_failure"));
    err.add("message", std::string(e.what()));
    std::cerr << emit_json(err);
    return 2;
  } catch (const std::domain_error& e) {
    Record err;
    err.add("error", std::string("domain_error"));
    err.add("message", std::string(e.what()));
    std::cerr << emit_json(err);
    return 2;
  }

  return write_output(emit_report(records, parse_format(opts->format)),
                      opts->output);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << "cavbal: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "cavbal: unexpected error: " << e.what() << "\n";
    return 1;
  }
}
