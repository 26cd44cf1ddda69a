#include "cavbal/moments.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "cavbal/errors.hpp"
#include "cavbal/numerics.hpp"

namespace cavbal {

namespace {

using quad = __float128;

constexpr long kDefaultPanelBudget = 1'000'000;
// Envelope-tail target relative to the running result; fixes the upper
// cutoff of the adaptive scheme.
constexpr double kTailRelTarget = 1e-13;
// Accuracy the quadrature must certify, else it refuses the value.
constexpr double kQuadRelTolerance = 1e-10;
constexpr long kTailCheckStride = 16;

quad q_abs(quad x) { return x < 0 ? -x : x; }

const GaussLegendre<quad>& rule16() {
  static const GaussLegendre<quad> r(16);
  return r;
}
const GaussLegendre<quad>& rule32() {
  static const GaussLegendre<quad> r(32);
  return r;
}

quad integrand(Kernel kernel, quad eps, quad xi, quad p) {
  const quad envelope = p * p * p * expq(-eps * p);
  if (xi == 0) return envelope;  // both kernels are 1 at xi = 0
  const quad x = xi * p;
  if (kernel == Kernel::cosine) return envelope * cosq(x);
  if (x == 0) return envelope;
  return envelope * sinq(x) / x;
}

quad panel(const GaussLegendre<quad>& rule, Kernel kernel, quad eps, quad xi,
           quad a, quad b) {
  const quad mid = (a + b) / 2;
  const quad half = (b - a) / 2;
  quad acc = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * integrand(kernel, eps, xi, mid + half * rule.nodes[i]);
  }
  return acc * half;
}

// integral_P^inf p^3 exp(-eps p) dp, the absolute bound on everything
// beyond the cutoff.
quad envelope_tail(quad eps, quad p) {
  const quad e1 = 1 / eps;
  return expq(-eps * p) *
         (p * p * p * e1 + 3 * p * p * e1 * e1 + 6 * p * e1 * e1 * e1 +
          6 * e1 * e1 * e1 * e1);
}

struct PanelRun {
  std::vector<quad> values;
  quad rule_diff_sum = 0;  // sum over panels of |GL32 - GL16|
  quad running = 0;
  quad tail = 0;
};

// Panels are summed smallest-magnitude first: adjacent half-period panels
// cancel by many orders, and ordered reduction keeps the rounding floor
// of the accumulation below the cancellation level.
double reduce(PanelRun& run, double eps, double xi) {
  std::sort(run.values.begin(), run.values.end(),
            [](quad a, quad b) { return q_abs(a) < q_abs(b); });
  quad total = 0;
  for (const quad v : run.values) total += v;

  const quad estimate = run.rule_diff_sum + run.tail;
  if (!(estimate <= kQuadRelTolerance * q_abs(total))) {
    throw quadrature_error(
        "moment_quadrature: error estimate above " +
            std::to_string(kQuadRelTolerance) + " of the result (eps=" +
            std::to_string(eps) + ", xi=" + std::to_string(xi) + ")",
        static_cast<double>(estimate), static_cast<double>(total));
  }
  return static_cast<double>(total);
}

double run_adaptive(Kernel kernel, double eps_d, double xi_d, long budget) {
  const quad eps = eps_d;
  const quad xi = xi_d;
  // Panels end on the kernel zeros (spacing pi/xi); wide panels are split
  // so no panel spans more than one e-folding of the cutoff factor.
  double width = xi_d != 0.0 ? std::numbers::pi / std::abs(xi_d) : 0.5 / eps_d;
  const double folds = width * eps_d;
  if (folds > 1.0) width /= std::ceil(folds);
  const quad w = width;

  PanelRun run;
  long i = 0;
  while (true) {
    if (i >= budget) {
      run.tail = envelope_tail(eps, w * i);
      const double estimate =
          static_cast<double>(run.rule_diff_sum + run.tail);
      throw quadrature_error(
          "moment_quadrature: panel budget " + std::to_string(budget) +
              " exhausted before the tail bound met its target (eps=" +
              std::to_string(eps_d) + ", xi=" + std::to_string(xi_d) + ")",
          estimate, static_cast<double>(run.running));
    }
    const quad a = w * i;
    const quad b = w * (i + 1);
    const quad hi = panel(rule32(), kernel, eps, xi, a, b);
    const quad lo = panel(rule16(), kernel, eps, xi, a, b);
    run.values.push_back(hi);
    run.rule_diff_sum += q_abs(hi - lo);
    run.running += hi;
    ++i;
    if (i % kTailCheckStride == 0) {
      run.tail = envelope_tail(eps, b);
      if (run.tail <= quad(kTailRelTarget) * q_abs(run.running)) break;
    }
  }
  return reduce(run, eps_d, xi_d);
}

double run_fixed(Kernel kernel, double eps_d, double xi_d,
                 const QuadratureSpec& spec) {
  if (!(spec.upper_cutoff > 0.0) || spec.panel_count < 1) {
    throw std::invalid_argument(
        "moment_quadrature: fixed scheme needs upper_cutoff > 0 and "
        "panel_count >= 1");
  }
  const quad eps = eps_d;
  const quad xi = xi_d;
  const quad w = quad(spec.upper_cutoff) / spec.panel_count;

  PanelRun run;
  for (long i = 0; i < spec.panel_count; ++i) {
    const quad a = w * i;
    const quad b = w * (i + 1);
    const quad hi = panel(rule32(), kernel, eps, xi, a, b);
    const quad lo = panel(rule16(), kernel, eps, xi, a, b);
    run.values.push_back(hi);
    run.rule_diff_sum += q_abs(hi - lo);
    run.running += hi;
  }
  run.tail = envelope_tail(eps, quad(spec.upper_cutoff));
  return reduce(run, eps_d, xi_d);
}

void require_positive_eps(double eps, const char* who) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw std::domain_error(std::string(who) + ": eps must be positive");
  }
}

}  // namespace

double moment_closed_form(Kernel kernel, double eps, double xi) {
  require_positive_eps(eps, "moment_closed_form");
  const double e2 = eps * eps;
  const double x2 = xi * xi;
  const double d = e2 + x2;
  if (kernel == Kernel::j0) {
    return 2.0 * (3.0 * e2 - x2) / (d * d * d);
  }
  return 6.0 * (e2 * e2 - 6.0 * e2 * x2 + x2 * x2) / (d * d * d * d);
}

double moment_quadrature(Kernel kernel, double eps, double xi,
                         const QuadratureSpec& spec) {
  require_positive_eps(eps, "moment_quadrature");
  if (spec.scheme == QuadratureSpec::Scheme::fixed) {
    return run_fixed(kernel, eps, xi, spec);
  }
  const long budget =
      spec.panel_count > 0 ? spec.panel_count : kDefaultPanelBudget;
  return run_adaptive(kernel, eps, xi, budget);
}

double limit_eps_zero(Kernel kernel, double xi) {
  if (xi == 0.0) {
    throw std::domain_error(
        "limit_eps_zero: xi = 0 is the divergent free-space mode");
  }
  const double x2 = xi * xi;
  const double inv_xi4 = 1.0 / (x2 * x2);
  // Shared inv_xi4 keeps the identity 3*j0_limit == -(cosine_limit)
  // exact in floating point.
  return kernel == Kernel::j0 ? -2.0 * inv_xi4 : 6.0 * inv_xi4;
}

}  // namespace cavbal
