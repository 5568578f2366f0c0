#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dirint/kernel.hpp"
#include "dirint/quadrature.hpp"

using namespace dirint;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("kernel") {

TEST_CASE("ft_theta_over_x at real points") {
  const ComplexFloat at1 = ft_theta_over_x(1.0);
  CHECK(at1.real() == doctest::Approx(-kEulerGamma).epsilon(1e-15));
  CHECK(at1.imag() == doctest::Approx(-kPi / 2).epsilon(1e-15));
  const ComplexFloat at_minus1 = ft_theta_over_x(-1.0);
  CHECK(at_minus1.real() == doctest::Approx(-kEulerGamma).epsilon(1e-15));
  CHECK(at_minus1.imag() == doctest::Approx(kPi / 2).epsilon(1e-15));
  const ComplexFloat at_e = ft_theta_over_x(std::numbers::e);
  CHECK(at_e.real() == doctest::Approx(-kEulerGamma - 1.0).epsilon(1e-15));
  CHECK(at_e.imag() == doctest::Approx(-kPi / 2).epsilon(1e-15));
  CHECK_THROWS_AS(ft_theta_over_x(0.0), std::domain_error);
}

TEST_CASE("ft_theta_over_x is continuous onto the real axis from below") {
  for (double k : {-3.0, -0.5, 0.25, 7.0}) {
    const ComplexFloat below = ft_theta_over_x({k, -1e-12});
    const ComplexFloat on = ft_theta_over_x(k);
    CHECK(std::abs(below - on) < 1e-9);
  }
}

TEST_CASE("ft_theta_over_xm") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    const ComplexFloat k{u(rng), u(rng)};
    REQUIRE(ft_theta_over_xm(1, k) == ft_theta_over_x(k));
  }
  // (-i)(-gamma - i pi/2 + 1) = -pi/2 + i(gamma - 1)
  const ComplexFloat m2 = ft_theta_over_xm(2, 1.0);
  CHECK(m2.real() == doctest::Approx(-kPi / 2).epsilon(1e-15));
  CHECK(m2.imag() == doctest::Approx(kEulerGamma - 1.0).epsilon(1e-14));
  // ((2i)^2/2)(-gamma - ln 2 + i pi/2 + 3/2); mpmath: -0.459274309077043659952 - pi i
  const ComplexFloat m3 = ft_theta_over_xm(3, -2.0);
  CHECK(m3.real() == doctest::Approx(-0.45927430907704366).epsilon(1e-13));
  CHECK(m3.imag() == doctest::Approx(-kPi).epsilon(1e-15));
  CHECK_THROWS_AS(ft_theta_over_xm(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ft_theta_over_xm(2, 0.0), std::domain_error);
}

TEST_CASE("eval_regularized approaches the Dirichlet integral") {
  double previous_gap = 1.0;
  for (double eps : {0.1, 0.01, 0.001}) {
    const double gap = std::abs(eval_regularized(1, 1, eps).real() - kPi / 2);
    CHECK(gap < previous_gap);
    previous_gap = gap;
  }
  CHECK(previous_gap < 0.05);
  // The damped Dirichlet integral is atan(1/eps).
  CHECK(eval_regularized(1, 1, 0.3).real() == doctest::Approx(std::atan(1 / 0.3)).epsilon(1e-14));
}

TEST_CASE("eval_regularized (2,2) at eps = 1/2") {
  // atan(4) - ln(17)/8 = 0.971665995661005455028 (mpmath quad and closed form agree)
  const ComplexFloat v = eval_regularized(2, 2, 0.5);
  CHECK(v.real() == doctest::Approx(0.97166599566100546).epsilon(1e-13));
  CHECK(std::abs(v.imag()) < 1e-12);
  CHECK(std::abs(v.real() - integrate_regularized(2, 2, 0.5).value) < 1e-6);
}

TEST_CASE("eval_regularized grows for the divergent (1,2) as eps shrinks") {
  CHECK(eval_regularized(1, 2, 0.01).real() > eval_regularized(1, 2, 0.1).real());
  CHECK(integrate_regularized(1, 2, 0.01).value > integrate_regularized(1, 2, 0.1).value);
}

TEST_CASE("the two lines of the damped identity") {
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (double eps : {1.0, 0.1, 0.001}) {
        const RegularizedTerms t = regularized_terms(m, n, eps);
        const ComplexFloat direct = eval_regularized(m, n, eps);
        REQUIRE(std::abs(t.total() - direct) <= 1e-10 * (1 + std::abs(direct)));
        // sum_l (-1)^l C(n,l) (n-2l+i eps)^(m-1) is a finite difference of
        // order n of a polynomial of degree m-1 < n.
        REQUIRE(std::abs(t.harmonic_line) < 1e-10);
      }
    }
  }
}

TEST_CASE("eval_regularized imaginary part is roundoff") {
  for (int n = 1; n <= 10; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (double eps : {1.0, 0.5, 0.1, 0.01, 0.001}) {
        const ComplexFloat v = eval_regularized(m, n, eps);
        REQUIRE(std::abs(v.imag()) <= 1e-9 * (1 + std::abs(v.real())));
      }
    }
  }
}

TEST_CASE("eval_regularized rejects bad input") {
  CHECK_THROWS_AS(eval_regularized(1, 1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(eval_regularized(1, 1, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(eval_regularized(3, 2, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(eval_regularized(0, 2, 0.5), std::invalid_argument);
}

}  // TEST_SUITE
