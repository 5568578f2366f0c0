#ifndef DIRINT_QUADRATURE_HPP
#define DIRINT_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dirint {

/// A quadrature result. `error_bound` is rigorous apart from the quadrature
/// rule's own estimate for m >= 2, and heuristic for m == 1.
struct NumericEstimate {
  double value = 0.0;
  double error_bound = 0.0;
  long long function_evals = 0;
  long long intervals = 0;
};

struct QuadratureConfig {
  double abs_tol = 1e-10;
  long long max_intervals = 1'000'000;
  double truncation_cap = 1e8;

  /// Defaults for the undamped integral: 1e-10 for m >= 2, 1e-6 for m == 1.
  static QuadratureConfig for_order(int m);
  /// Defaults for the damped integral (absolutely convergent for every m).
  static QuadratureConfig for_damped() { return {}; }
};

/// Thrown when the requested tolerance cannot be reached.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over the union of
/// consecutive cells given by `breakpoints` (at least two, increasing).
/// Bisects the interval with the largest error until the summed error
/// estimate is <= abs_tol. Throws QuadratureError if max_intervals is hit or
/// abs_tol is below the roundoff floor of the rule.
NumericEstimate integrate_adaptive(const std::function<double(double)>& f,
                                   std::span<const double> breakpoints, double abs_tol,
                                   long long max_intervals);

/// Result of iterated pairwise averaging of partial sums.
struct Acceleration {
  double value = 0.0;
  double last_correction = 0.0;
  int depth = 0;
};

/// Repeatedly replaces the sequence by the means of neighbouring entries
/// (the Euler transform of the underlying alternating series). Stops when
/// the change of the last entry drops below `tol`, when that change starts
/// to grow, at `max_depth`, or when one entry remains.
/// Throws std::invalid_argument for fewer than 4 partial sums.
Acceleration accelerate_alternating(std::span<const double> partial_sums, double tol = 0.0,
                                    int max_depth = 30);

/// sin^n(x) / x^m, continuous at x = 0.
double sinc_power(int m, int n, double x);

/// integral_0^inf sin^n(x) / x^m dx for a convergent (m, n).
///
/// m >= 2: integrates over [0, X] with X a multiple of the period of sin^n,
/// adds the mean of sin^n times X^(1-m)/(m-1) as the tail, and bounds the
/// rest of the tail by A * X^-m, A = integral of sin^n over [0, pi].
/// m == 1 (odd n): sums the integral cell by cell over [k pi, (k+1) pi] and
/// accelerates the alternating partial sums.
///
/// Throws std::invalid_argument for divergent (m, n) and QuadratureError when
/// the tolerance cannot be met.
NumericEstimate integrate_sinc_power(int m, int n, const QuadratureConfig& cfg);
NumericEstimate integrate_sinc_power(int m, int n);

/// integral_0^inf sin^n(x) / x^m exp(-eps x) dx, truncated at
/// X = max(50/eps, 50) with the exponential tail folded into the bound.
/// Throws std::invalid_argument for eps <= 0 or m > n.
NumericEstimate integrate_regularized(int m, int n, double eps, const QuadratureConfig& cfg);
NumericEstimate integrate_regularized(int m, int n, double eps);

}  // namespace dirint

#endif  // DIRINT_QUADRATURE_HPP
