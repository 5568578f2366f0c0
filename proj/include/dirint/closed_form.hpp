#ifndef DIRINT_CLOSED_FORM_HPP
#define DIRINT_CLOSED_FORM_HPP

#include <string>
#include <string_view>
#include <variant>

#include "dirint/exact.hpp"

namespace dirint {

/// Default upper limit on n accepted by evaluate and the CLI.
inline constexpr int kDefaultMaxN = 64;

/// Exponents of I(m,n) = integral over (0, inf) of sin^n(x) / x^m.
struct IntegralParams {
  int m = 1;  // power of x
  int n = 1;  // power of sin
};

enum class Convergence {
  AbsolutelyConvergent,     // n >= m >= 2
  ConditionallyConvergent,  // m == 1, n odd
  DivergentEvenN,           // m == 1, n even
  DivergentOrigin,          // m > n
};

enum class DivergenceReason { EvenNWithM1, OriginSingularity };

std::string_view to_string(Convergence c);
std::string_view to_string(DivergenceReason r);

class ClosedFormResult {
 public:
  static ClosedFormResult exact(SymbolicReal v) { return ClosedFormResult(std::move(v)); }
  static ClosedFormResult divergent(DivergenceReason r) { return ClosedFormResult(r); }

  bool is_exact() const { return std::holds_alternative<SymbolicReal>(v_); }
  /// Throws std::logic_error when divergent.
  const SymbolicReal& value() const;
  /// Throws std::logic_error when exact.
  DivergenceReason reason() const;

  friend bool operator==(const ClosedFormResult&, const ClosedFormResult&) = default;

 private:
  explicit ClosedFormResult(SymbolicReal v) : v_(std::move(v)) {}
  explicit ClosedFormResult(DivergenceReason r) : v_(r) {}
  std::variant<SymbolicReal, DivergenceReason> v_;
};

/// C(n, l); zero outside 0 <= l <= n.
BigInt binomial(int n, int l);

/// H_k = 1 + 1/2 + ... + 1/k, with H_0 = 0.
Rational harmonic(int k);

/// sum_{l=0}^{n} (-1)^l C(n,l) (n-2l)^(m-1), with 0^0 = 1.
/// Vanishes for n >= m >= 2, and for m == 1 (where it is (1-1)^n).
BigInt alternating_power_sum(int n, int m);

/// Throws std::invalid_argument for m < 1 or n < 1.
Convergence classify(IntegralParams p);

/// The un-normalized complex sum before the real part is taken, exposed so
/// callers can inspect the cancellation the evaluation relies on.
struct Assembly {
  /// i^(m-n+1) / (2^n (m-1)!) * sum' (-1)^l C(n,l) (n-2l)^(m-1) ln[i(2l-n)]
  SymbolicComplex value;
  /// Integer multiplying (H_{m-1} - gamma) in the damped identity at eps = 0.
  BigInt harmonic_line;
};

/// Builds the assembly for a convergent (m, n). Throws std::invalid_argument
/// for divergent or out-of-range parameters.
Assembly assemble(IntegralParams p, int max_n = kDefaultMaxN);

/// Exact value of I(m,n), or the reason it diverges.
///
/// Throws std::invalid_argument for m < 1, n < 1 or n > max_n, and
/// std::logic_error if the imaginary part or the harmonic line fails to
/// cancel (an internal bug, never an input problem).
ClosedFormResult evaluate(IntegralParams p, int max_n = kDefaultMaxN);

enum class RenderFormat { Plain, Latex };

/// Canonical text: pi term first, then logarithms by ascending prime.
std::string render(const SymbolicReal& v, RenderFormat fmt);
std::string render(const ClosedFormResult& r, RenderFormat fmt);

}  // namespace dirint

#endif  // DIRINT_CLOSED_FORM_HPP
