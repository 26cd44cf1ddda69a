#pragma once

#include <array>
#include <functional>

namespace cavbal {

// Integer mode triple (n1, n2, n3); the wave numbers are pi/a times these.
struct ModeIndex {
  int n1 = 0;
  int n2 = 0;
  int n3 = 0;

  bool is_zero_mode() const { return n1 == 0 && n2 == 0 && n3 == 0; }
  std::array<double, 3> wave_numbers(double box_size) const;
};

// Index on the Fourier-transformed side of the summation identity,
// with xi_i = 2*pi*lambda_i. The (0,0,0) entry is the free-space term.
struct PoissonIndex {
  int lambda1 = 0;
  int lambda2 = 0;
  int lambda3 = 0;

  std::array<double, 3> xi() const;
  bool is_free_space() const {
    return lambda1 == 0 && lambda2 == 0 && lambda3 == 0;
  }
};

// True iff the index is the lambda = (0,0,0) term, which reproduces the
// unbounded-space zero-point energy and must be excluded from any cavity
// energy assembly. Kept as a named operation so call sites say what they
// are skipping.
bool identify_free_space(const PoissonIndex& index);

struct SumCheckReport {
  double lhs_value = 0.0;   // direct sum over integers
  double rhs_value = 0.0;   // sum of the Fourier-transformed terms
  long truncation_n = 0;    // |n| <= truncation_n on the direct side
  double abs_diff = 0.0;
  double tolerance = 0.0;
  bool converged = false;   // abs_diff <= tolerance
};

enum class SummandFamily { gaussian, lorentzian };

// Sum_{n=-N..N} summand(n), evaluated as f(0) + sum of (f(n) + f(-n))
// with compensated accumulation. Throws numeric_error naming the
// offending n if any term is non-finite.
double direct_sum_1d(const std::function<double(long)>& summand, long n_max);

// (pi/beta) * coth(pi*beta), the closed value of Sum 1/(beta^2 + n^2).
// Evaluated via expm1 so large beta degrades gracefully to pi/beta
// instead of overflowing.
double lorentzian_closed_form(double beta);

// Evaluates both sides of the summation identity for one of the two
// validation families and reports the comparison.
//
// gaussian: f(n) = exp(-pi n^2); its Fourier transform has the same form,
// so the transformed side is the same sum truncated at |s| <= 6.
// `param` is unused.
//
// lorentzian: f(n) = 1/(beta^2 + n^2) with param = beta > 0. The direct
// side adds a midpoint-rule tail estimate for |n| > N (error O(N^-3));
// without it the bare truncation error 2/N would swamp the comparison.
// The transformed side is (pi/beta) * sum of exp(-2 pi beta |s|) over
// |s| <= 500.
//
// Default tolerances: 1e-14 (gaussian), 1e-10 (lorentzian).
SumCheckReport poisson_check(SummandFamily family, double param, long n_max);
SumCheckReport poisson_check(SummandFamily family, double param, long n_max,
                             double tolerance);

}  // namespace cavbal
