#include "dirint/exact.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace dirint {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = den < 0 ? BigRational(-num, -den) : BigRational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const {
  const BigInt den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

namespace {

bool is_integer_literal(const std::string& s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && !s.empty() && s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  if (!is_integer_literal(num, true)) {
    throw std::invalid_argument("Rational::parse: malformed numerator in '" + text + "'");
  }
  if (slash == std::string::npos) return Rational(BigInt(num));
  const std::string den = text.substr(slash + 1);
  if (!is_integer_literal(den, false)) {
    throw std::invalid_argument("Rational::parse: malformed denominator in '" + text + "'");
  }
  return Rational(BigInt(num), BigInt(den));
}

SymbolicReal SymbolicReal::pi(const Rational& coeff) {
  SymbolicReal r;
  r.pi_ = coeff;
  return r;
}

SymbolicReal SymbolicReal::log_prime(std::uint64_t prime, const Rational& coeff) {
  if (!is_prime(prime)) {
    throw std::invalid_argument("SymbolicReal::log_prime: " + std::to_string(prime) +
                                " is not prime");
  }
  SymbolicReal r;
  r.add_log(prime, coeff);
  return r;
}

Rational SymbolicReal::log_coeff(std::uint64_t prime) const {
  const auto it = logs_.find(prime);
  return it == logs_.end() ? Rational() : it->second;
}

void SymbolicReal::add_log(std::uint64_t prime, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = logs_.try_emplace(prime, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) logs_.erase(it);
}

SymbolicReal& SymbolicReal::operator+=(const SymbolicReal& o) {
  pi_ += o.pi_;
  for (const auto& [p, c] : o.logs_) add_log(p, c);
  return *this;
}

SymbolicReal& SymbolicReal::operator-=(const SymbolicReal& o) {
  pi_ -= o.pi_;
  for (const auto& [p, c] : o.logs_) add_log(p, -c);
  return *this;
}

SymbolicReal& SymbolicReal::operator*=(const Rational& s) {
  if (s.is_zero()) {
    *this = SymbolicReal();
    return *this;
  }
  pi_ *= s;
  for (auto& [p, c] : logs_) c *= s;
  return *this;
}

GaussianRational i_power(long long e) {
  // ((e % 4) + 4) % 4 handles negative exponents.
  switch (((e % 4) + 4) % 4) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(1)};
    case 2: return {Rational(-1), Rational(0)};
    default: return {Rational(0), Rational(-1)};
  }
}

bool is_prime(std::uint64_t k) {
  if (k < 2) return false;
  for (std::uint64_t d = 2; d * d <= k; ++d) {
    if (k % d == 0) return false;
  }
  return true;
}

SymbolicReal factor_log(long long k) {
  if (k < 1) throw std::domain_error("factor_log: argument must be >= 1, got " + std::to_string(k));
  SymbolicReal out;
  auto rest = static_cast<std::uint64_t>(k);
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    long long e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    if (e > 0) out += SymbolicReal::log_prime(d, Rational(e));
  }
  if (rest > 1) out += SymbolicReal::log_prime(rest, Rational(1));
  return out;
}

SymbolicComplex log_of_i_times(long long a) {
  if (a == 0) throw std::domain_error("log_of_i_times: ln(i*0) is undefined");
  const long long magnitude = a < 0 ? -a : a;
  return {factor_log(magnitude), SymbolicReal::pi(Rational(BigInt(a < 0 ? -1 : 1), BigInt(2)))};
}

double to_float(const SymbolicReal& v) {
  // Neumaier summation.
  double sum = 0.0;
  double carry = 0.0;
  auto add = [&](double term) {
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      carry += (sum - t) + term;
    } else {
      carry += (term - t) + sum;
    }
    sum = t;
  };
  add(v.pi_coeff().to_double() * std::numbers::pi);
  for (const auto& [p, c] : v.log_coeffs()) {
    add(c.to_double() * std::log(static_cast<double>(p)));
  }
  return sum + carry;
}

}  // namespace dirint
