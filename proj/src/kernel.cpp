#include "dirint/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dirint {

namespace {

constexpr ComplexFloat kI{0.0, 1.0};

void check_eps_params(int m, int n, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
  if (m < 1 || n < 1) throw std::invalid_argument("need m >= 1 and n >= 1");
  if (m > n) {
    throw std::invalid_argument("damped integral needs n >= m, got m=" + std::to_string(m) +
                                ", n=" + std::to_string(n));
  }
}

double binomial_d(int n, int l) {
  double c = 1.0;
  for (int i = 0; i < l; ++i) c = c * (n - i) / (i + 1);
  return c;
}

double factorial_d(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

double harmonic_d(int k) {
  double h = 0.0;
  for (int l = 1; l <= k; ++l) h += 1.0 / l;
  return h;
}

ComplexFloat ipow_c(ComplexFloat z, int e) {
  ComplexFloat r{1.0, 0.0};
  for (int i = 0; i < e; ++i) r *= z;
  return r;
}

// i^e exactly, for any integer e.
ComplexFloat i_power_c(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

ComplexFloat ft_theta_over_x(ComplexFloat k) {
  if (k == ComplexFloat{}) throw std::domain_error("ft_theta_over_x: k must be nonzero");
  ComplexFloat log_ik;
  if (k.imag() == 0.0) {
    const double s = k.real() > 0.0 ? 1.0 : -1.0;
    log_ik = {std::log(std::abs(k.real())), s * std::numbers::pi / 2};
  } else {
    log_ik = std::log(kI * k);
  }
  return -kEulerGamma - log_ik;
}

ComplexFloat ft_theta_over_xm(int m, ComplexFloat k) {
  if (m < 1) throw std::invalid_argument("ft_theta_over_xm: m must be >= 1");
  const ComplexFloat base = ft_theta_over_x(k);
  if (m == 1) return base;
  return ipow_c(-kI * k, m - 1) / factorial_d(m - 1) * (base + harmonic_d(m - 1));
}

RegularizedTerms regularized_terms(int m, int n, double eps) {
  check_eps_params(m, n, eps);
  ComplexFloat log_sum{};
  ComplexFloat power_sum{};
  for (int l = 0; l <= n; ++l) {
    const double sign = l % 2 == 0 ? 1.0 : -1.0;
    const double c = sign * binomial_d(n, l);
    const ComplexFloat power = ipow_c(ComplexFloat(n - 2 * l, eps), m - 1);
    // i(2l - n - i eps) = eps + i(2l - n): positive real part, so the
    // principal branch never crosses its cut.
    const ComplexFloat log_term = std::log(ComplexFloat(eps, 2.0 * l - n));
    log_sum += c * power * log_term;
    power_sum += c * power;
  }
  const double scale = std::ldexp(1.0, -n) / factorial_d(m - 1);
  return {
      i_power_c(m - n + 1) * scale * log_sum,
      (harmonic_d(m - 1) - kEulerGamma) * i_power_c(m - 1 - n) * scale * power_sum,
  };
}

ComplexFloat eval_regularized(int m, int n, double eps) {
  check_eps_params(m, n, eps);
  // 1/(2i)^n = i^(-n) / 2^n
  const ComplexFloat front = i_power_c(-n) * std::ldexp(1.0, -n);
  ComplexFloat total{};
  for (int l = 0; l <= n; ++l) {
    const double sign = l % 2 == 0 ? 1.0 : -1.0;
    total += sign * binomial_d(n, l) * ft_theta_over_xm(m, ComplexFloat(2.0 * l - n, -eps));
  }
  return front * total;
}

}  // namespace dirint
