#include "dirint/closed_form.hpp"

#include <stdexcept>
#include <vector>

namespace dirint {

std::string_view to_string(Convergence c) {
  switch (c) {
    case Convergence::AbsolutelyConvergent: return "AbsolutelyConvergent";
    case Convergence::ConditionallyConvergent: return "ConditionallyConvergent";
    case Convergence::DivergentEvenN: return "DivergentEvenN";
    case Convergence::DivergentOrigin: return "DivergentOrigin";
  }
  return "?";
}

std::string_view to_string(DivergenceReason r) {
  switch (r) {
    case DivergenceReason::EvenNWithM1: return "EvenNWithM1";
    case DivergenceReason::OriginSingularity: return "OriginSingularity";
  }
  return "?";
}

const SymbolicReal& ClosedFormResult::value() const {
  if (const auto* v = std::get_if<SymbolicReal>(&v_)) return *v;
  throw std::logic_error("ClosedFormResult::value on a divergent result");
}

DivergenceReason ClosedFormResult::reason() const {
  if (const auto* r = std::get_if<DivergenceReason>(&v_)) return *r;
  throw std::logic_error("ClosedFormResult::reason on an exact result");
}

BigInt binomial(int n, int l) {
  if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
  if (l < 0 || l > n) return 0;
  if (l > n - l) l = n - l;
  BigInt c = 1;
  // Each partial product c * (n-i) / (i+1) is itself a binomial coefficient.
  for (int i = 0; i < l; ++i) {
    c *= n - i;
    c /= i + 1;
  }
  return c;
}

Rational harmonic(int k) {
  if (k < 0) throw std::invalid_argument("harmonic: k must be >= 0");
  Rational h;
  for (int l = 1; l <= k; ++l) h += Rational(BigInt(1), BigInt(l));
  return h;
}

namespace {

BigInt ipow(long long base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

BigInt factorial(int k) {
  BigInt r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

void check_params(IntegralParams p) {
  if (p.m < 1 || p.n < 1) {
    throw std::invalid_argument("I(m,n) needs m >= 1 and n >= 1, got m=" + std::to_string(p.m) +
                                ", n=" + std::to_string(p.n));
  }
}

}  // namespace

BigInt alternating_power_sum(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("alternating_power_sum: needs n >= 1, m >= 1");
  BigInt s = 0;
  for (int l = 0; l <= n; ++l) {
    const BigInt term = binomial(n, l) * ipow(n - 2 * l, m - 1);  // ipow(0, 0) == 1
    if (l % 2 == 0) {
      s += term;
    } else {
      s -= term;
    }
  }
  return s;
}

Convergence classify(IntegralParams p) {
  check_params(p);
  if (p.m > p.n) return Convergence::DivergentOrigin;
  if (p.m == 1) {
    return p.n % 2 == 0 ? Convergence::DivergentEvenN : Convergence::ConditionallyConvergent;
  }
  return Convergence::AbsolutelyConvergent;
}

Assembly assemble(IntegralParams p, int max_n) {
  const Convergence c = classify(p);
  if (p.n > max_n) {
    throw std::invalid_argument("n=" + std::to_string(p.n) + " exceeds the configured cap " +
                                std::to_string(max_n));
  }
  if (c == Convergence::DivergentEvenN || c == Convergence::DivergentOrigin) {
    throw std::invalid_argument("assemble: I(" + std::to_string(p.m) + "," + std::to_string(p.n) +
                                ") is divergent");
  }
  const auto [m, n] = p;

  SymbolicComplex sum;
  for (int l = 0; l <= n; ++l) {
    const int shift = 2 * l - n;
    // Primed sum: the 2l = n term carries 0^(m-1) ln(i*0) and is dropped
    // (only reachable here for even n, m >= 2).
    if (shift == 0) continue;
    BigInt coeff = binomial(n, l) * ipow(n - 2 * l, m - 1);
    if (l % 2 != 0) coeff = -coeff;
    sum += log_of_i_times(shift) * Rational(coeff);
  }

  const GaussianRational prefactor =
      i_power(m - n + 1) * Rational(BigInt(1), ipow(2, n) * factorial(m - 1));
  return {sum * prefactor, alternating_power_sum(n, m)};
}

ClosedFormResult evaluate(IntegralParams p, int max_n) {
  switch (classify(p)) {
    case Convergence::DivergentEvenN:
      return ClosedFormResult::divergent(DivergenceReason::EvenNWithM1);
    case Convergence::DivergentOrigin:
      return ClosedFormResult::divergent(DivergenceReason::OriginSingularity);
    default:
      break;
  }
  Assembly a = assemble(p, max_n);
  const std::string where = "I(" + std::to_string(p.m) + "," + std::to_string(p.n) + ")";
  if (a.harmonic_line != 0) {
    throw std::logic_error("evaluate: (H - gamma) line does not cancel for " + where);
  }
  if (!a.value.im.is_zero()) {
    throw std::logic_error("evaluate: nonzero imaginary part for " + where);
  }
  return ClosedFormResult::exact(std::move(a.value.re));
}

namespace {

struct Term {
  Rational coeff;
  std::string plain_basis;
  std::string latex_basis;
};

std::string latex_magnitude(const Rational& c) {
  const Rational a = c.sign() < 0 ? -c : c;
  if (a == Rational(1)) return "";
  if (a.is_integer()) return a.numerator().str();
  return "\\frac{" + a.numerator().str() + "}{" + a.denominator().str() + "}";
}

std::string plain_magnitude(const Rational& c) {
  const Rational a = c.sign() < 0 ? -c : c;
  if (a == Rational(1)) return "";
  return a.to_string() + "*";
}

}  // namespace

std::string render(const SymbolicReal& v, RenderFormat fmt) {
  std::vector<Term> terms;
  if (!v.pi_coeff().is_zero()) terms.push_back({v.pi_coeff(), "pi", "\\pi"});
  for (const auto& [p, c] : v.log_coeffs()) {
    terms.push_back({c, "ln(" + std::to_string(p) + ")", "\\ln " + std::to_string(p)});
  }
  if (terms.empty()) return "0";

  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Term& t = terms[i];
    const bool negative = t.coeff.sign() < 0;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (fmt == RenderFormat::Plain) {
      out += plain_magnitude(t.coeff) + t.plain_basis;
    } else {
      out += latex_magnitude(t.coeff) + t.latex_basis;
    }
  }
  return out;
}

std::string render(const ClosedFormResult& r, RenderFormat fmt) {
  if (r.is_exact()) return render(r.value(), fmt);
  return fmt == RenderFormat::Plain ? "divergent" : "\\text{divergent}";
}

}  // namespace dirint
