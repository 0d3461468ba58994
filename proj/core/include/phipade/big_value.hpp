#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>

#include "phipade/precision.hpp"

namespace phipade {

// A real scalar that is either an exact rational or an MPFR float.
//
// Arithmetic between two exact values stays exact. As soon as one operand is
// a float, the result is a float at the current default precision. Rationals
// are kept canonical by GMP (lowest terms, positive denominator).
class BigValue {
public:
  BigValue() : value_(Rational(0)) {}
  BigValue(int v) : value_(Rational(v)) {}
  BigValue(long v) : value_(Rational(v)) {}
  BigValue(long long v) : value_(Rational(v)) {}
  BigValue(Rational v) : value_(std::move(v)) {}
  BigValue(Real v) : value_(std::move(v)) {}

  static BigValue ratio(long long num, long long den);

  // "3/4", "-21" -> exact; "0.351", "1e-3" -> float at the current precision.
  static BigValue parse(std::string_view text);
  // Decimal literal stored exactly as a scaled integer ("0.3510695977" ->
  // 3510695977/10^10).
  static BigValue exact_decimal(std::string_view text);

  bool is_exact() const noexcept {
    return std::holds_alternative<Rational>(value_);
  }
  const Rational& exact() const;
  Real to_real() const;
  double to_double() const;

  bool is_zero() const;
  int sign() const;
  BigValue abs() const;

  // Exact values print as "p/q" (or "p"); floats print with `digits`
  // significant digits.
  std::string to_string(unsigned digits = kDefaultDigits) const;

  BigValue& operator+=(const BigValue& rhs);
  BigValue& operator-=(const BigValue& rhs);
  BigValue& operator*=(const BigValue& rhs);
  BigValue& operator/=(const BigValue& rhs);

  friend BigValue operator+(BigValue lhs, const BigValue& rhs) { return lhs += rhs; }
  friend BigValue operator-(BigValue lhs, const BigValue& rhs) { return lhs -= rhs; }
  friend BigValue operator*(BigValue lhs, const BigValue& rhs) { return lhs *= rhs; }
  friend BigValue operator/(BigValue lhs, const BigValue& rhs) { return lhs /= rhs; }
  BigValue operator-() const;

  // Numerical comparison (exact vs float compares the float values).
  friend bool operator==(const BigValue& lhs, const BigValue& rhs);
  friend std::partial_ordering operator<=>(const BigValue& lhs,
                                           const BigValue& rhs);

private:
  std::variant<Rational, Real> value_;
};

BigValue pow(const BigValue& base, unsigned exponent);

// Formats a float with `digits` significant digits. Scientific notation is used
// for |x| < 1e-4 or |x| >= 1e6, fixed otherwise; '.' is always the separator.
std::string format_real(const Real& x, unsigned digits);

// Exact binomial coefficient C(n, k).
Integer binomial(unsigned n, unsigned k);

} // namespace phipade
