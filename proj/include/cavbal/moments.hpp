#pragma once

namespace cavbal {

// Oscillatory kernel of the cutoff-regularized third-moment integral
//   I(eps, xi) = integral_0^inf p^3 exp(-eps p) K(xi p) dp
// with K = j0 (spherical Bessel, sin x / x) or K = cos.
enum class Kernel { j0, cosine };

// Controls for the numerical quadrature. The adaptive scheme picks panels
// at the kernel zeros and extends the upper cutoff until the envelope
// tail integral of p^3 exp(-eps p) drops below 1e-13 of the running
// result; panel_count then acts as a budget. The fixed scheme integrates
// exactly panel_count uniform panels over [0, upper_cutoff].
struct QuadratureSpec {
  enum class Scheme { adaptive, fixed };

  Scheme scheme = Scheme::adaptive;
  double upper_cutoff = 0.0;  // fixed scheme only
  long panel_count = 0;       // 0 = default budget (adaptive) / invalid (fixed)
};

// Closed form of I(eps, xi), exact as a rational function:
//   j0:     2 (3 eps^2 - xi^2) / (eps^2 + xi^2)^3
//   cosine: 6 (eps^4 - 6 eps^2 xi^2 + xi^4) / (eps^2 + xi^2)^4
// Both are even in xi. Requires eps > 0; the eps -> 0 value is only
// available through limit_eps_zero.
double moment_closed_form(Kernel kernel, double eps, double xi);

// The same integral by panelled Gauss-Legendre quadrature, evaluated in
// quad precision. The integrand cancels catastrophically for small
// eps/xi (the envelope integral is 6/eps^4 against a result of order
// 2/xi^4), so double-precision panels cannot certify the closed form at
// the tolerances this project tests; extended precision is what makes
// this an oracle rather than an estimate. Throws quadrature_error with
// the error estimate if the panel budget or accuracy target cannot be
// met (eps below ~1e-4 starts to exhaust the default budget).
double moment_quadrature(Kernel kernel, double eps, double xi,
                         const QuadratureSpec& spec = {});

// eps -> 0 limit, taken symbolically from the leading term of the
// rational function (never by floating-point limit-taking):
//   j0 -> -2/xi^4,  cosine -> +6/xi^4.
// xi = 0 is the divergent free-space mode and is rejected.
double limit_eps_zero(Kernel kernel, double xi);

}  // namespace cavbal
