#ifndef DIRINT_EXACT_HPP
#define DIRINT_EXACT_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dirint {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using BigRational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                                  boost::multiprecision::et_off>;

/// Exact signed rational, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& v) : v_(BigRational(v)) {}
  Rational(const BigInt& num, const BigInt& den);

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_.sign(); }
  double to_double() const { return v_.convert_to<double>(); }

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;
  /// Inverse of to_string; throws std::invalid_argument on malformed text.
  static Rational parse(const std::string& text);

  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.v_.compare(b.v_) <=> 0;
  }

 private:
  explicit Rational(BigRational v) : v_(std::move(v)) {}
  BigRational v_;
};

/// a + b*i over the rationals.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational times_i() const { return {-im, re}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator*(const GaussianRational& a, const Rational& s) {
    return {a.re * s, a.im * s};
  }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

/// Exact element of Q*pi + sum_p Q*ln(p) over primes p.
///
/// Zero coefficients are never stored, so structural equality is value
/// equality (pi and the logarithms of distinct primes are linearly
/// independent over Q).
class SymbolicReal {
 public:
  using LogMap = std::map<std::uint64_t, Rational>;

  SymbolicReal() = default;

  static SymbolicReal pi(const Rational& coeff);
  /// coeff * ln(prime); `prime` must be prime (checked).
  static SymbolicReal log_prime(std::uint64_t prime, const Rational& coeff);

  const Rational& pi_coeff() const { return pi_; }
  const LogMap& log_coeffs() const { return logs_; }
  /// Coefficient of ln(prime); zero when absent.
  Rational log_coeff(std::uint64_t prime) const;

  bool is_zero() const { return pi_.is_zero() && logs_.empty(); }

  SymbolicReal& operator+=(const SymbolicReal& o);
  SymbolicReal& operator-=(const SymbolicReal& o);
  SymbolicReal& operator*=(const Rational& s);

  friend SymbolicReal operator+(SymbolicReal a, const SymbolicReal& b) { return a += b; }
  friend SymbolicReal operator-(SymbolicReal a, const SymbolicReal& b) { return a -= b; }
  friend SymbolicReal operator*(SymbolicReal a, const Rational& s) { return a *= s; }
  friend SymbolicReal operator*(const Rational& s, SymbolicReal a) { return a *= s; }
  SymbolicReal operator-() const { return *this * Rational(-1); }

  friend bool operator==(const SymbolicReal&, const SymbolicReal&) = default;

 private:
  void add_log(std::uint64_t prime, const Rational& coeff);

  Rational pi_;
  LogMap logs_;
};

/// re + i*im with symbolic real and imaginary parts.
struct SymbolicComplex {
  SymbolicReal re;
  SymbolicReal im;

  SymbolicComplex& operator+=(const SymbolicComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  SymbolicComplex operator-() const { return {-re, -im}; }

  friend SymbolicComplex operator+(SymbolicComplex a, const SymbolicComplex& b) { return a += b; }
  friend SymbolicComplex operator*(const SymbolicComplex& z, const Rational& s) {
    return {z.re * s, z.im * s};
  }
  friend SymbolicComplex operator*(const SymbolicComplex& z, const GaussianRational& g) {
    return {z.re * g.re - z.im * g.im, z.re * g.im + z.im * g.re};
  }
  friend bool operator==(const SymbolicComplex&, const SymbolicComplex&) = default;
};

/// i^e for any integer e.
GaussianRational i_power(long long e);

bool is_prime(std::uint64_t k);

/// ln(k) in the prime-log basis, by trial division. Throws for k < 1.
SymbolicReal factor_log(long long k);

/// ln(i*a) = ln|a| + i*(pi/2)*sign(a). Throws std::domain_error for a == 0.
SymbolicComplex log_of_i_times(long long a);

/// Double-precision value, compensated summation over terms.
double to_float(const SymbolicReal& v);

}  // namespace dirint

#endif  // DIRINT_EXACT_HPP
