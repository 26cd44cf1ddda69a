#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace cavbal {

// Neumaier-compensated accumulator. Long mode sums and quadrature
// reductions in this project routinely add ~10^6 terms; naive summation
// would put the rounding floor right at the tolerances we test against.
class KahanSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
// on the Legendre recurrence. T can be double or __float128.
template <typename T>
struct GaussLegendre {
  std::vector<T> nodes;
  std::vector<T> weights;

  explicit GaussLegendre(int n) : nodes(n), weights(n) {
    const T one = T(1);
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < (n + 1) / 2; ++i) {
      // Chebyshev-like initial guess, then Newton on P_n(x) = 0.
      T x = T(std::cos(pi * (i + 0.75) / (n + 0.5)));
      T dp = T(0);
      for (int it = 0; it < 100; ++it) {
        T p0 = one, p1 = T(0);
        for (int k = 0; k < n; ++k) {
          const T p2 = p1;
          p1 = p0;
          p0 = ((T(2 * k + 1) * x * p1) - T(k) * p2) / T(k + 1);
        }
        dp = T(n) * (x * p0 - p1) / (x * x - one);
        const T dx = p0 / dp;
        x -= dx;
        if (dx == T(0) || (dx < T(0) ? -dx : dx) < T(1e-36)) break;
      }
      nodes[i] = -x;
      nodes[n - 1 - i] = x;
      const T w = T(2) / ((one - x * x) * dp * dp);
      weights[i] = w;
      weights[n - 1 - i] = w;
    }
  }
};

}  // namespace cavbal
