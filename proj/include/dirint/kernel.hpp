#ifndef DIRINT_KERNEL_HPP
#define DIRINT_KERNEL_HPP

#include <complex>

namespace dirint {

using ComplexFloat = std::complex<double>;

/// Euler's constant.
inline constexpr double kEulerGamma = 0.5772156649015329;

// Fourier transforms use F[f](k) = integral f(x) exp(-i k x) dx. The
// distribution Theta(x)/x (Theta the unit step) has the transform
// -gamma - ln(i k); Theta(x)/x^m follows from it by the derivative rule,
//
//   F[Theta/x^m](k) = (-i k)^(m-1) / (m-1)! * (F[Theta/x](k) + H_{m-1}).
//
// Evaluating at k - i*eps with eps > 0 gives the transform of the damped
// function Theta(x) exp(-eps x) / x^m (up to the regularization at the origin).

/// -gamma - ln(i k). Real k uses ln|k| + i*(pi/2)*sign(k); complex k uses the
/// principal branch. Throws std::domain_error for k == 0.
ComplexFloat ft_theta_over_x(ComplexFloat k);

/// Transform of Theta(x)/x^m at k. Throws std::invalid_argument for m < 1 and
/// std::domain_error for k == 0.
ComplexFloat ft_theta_over_xm(int m, ComplexFloat k);

/// The pair of sums that make up the damped integral
/// integral_0^inf sin^n(x) / x^m * exp(-eps x) dx once sin^n is expanded into
/// exponentials:
///   log_line:      i^(m-n+1)/(2^n (m-1)!) sum_l (-1)^l C(n,l) (n-2l+i eps)^(m-1) ln[i(2l-n-i eps)]
///   harmonic_line: (H_{m-1} - gamma) i^(m-1-n)/(2^n (m-1)!) sum_l (-1)^l C(n,l) (n-2l+i eps)^(m-1)
struct RegularizedTerms {
  ComplexFloat log_line;
  ComplexFloat harmonic_line;
  ComplexFloat total() const { return log_line + harmonic_line; }
};

/// Both lines of the damped identity at the given eps.
/// Throws std::invalid_argument for eps <= 0, m < 1, n < 1 or m > n.
RegularizedTerms regularized_terms(int m, int n, double eps);

/// sum_l (-1)^l C(n,l) / (2i)^n * F[Theta/x^m](2l - n - i eps).
/// Approximates the damped integral; its imaginary part is roundoff.
ComplexFloat eval_regularized(int m, int n, double eps);

}  // namespace dirint

#endif  // DIRINT_KERNEL_HPP
