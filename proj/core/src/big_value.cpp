#include "phipade/big_value.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "phipade/errors.hpp"

namespace phipade {

namespace {

bool looks_like_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  std::string out(s.substr(b, e - b));
  if (!out.empty() && out[0] == '+') out.erase(0, 1);
  return out;
}

Integer parse_integer(const std::string& s) {
  if (!looks_like_integer(s)) throw ParseError("not an integer: '" + s + "'");
  // GMP reads a leading 0 as octal
  std::string digits = s;
  const std::size_t sign = (digits[0] == '-') ? 1 : 0;
  const std::size_t first = digits.find_first_not_of('0', sign);
  digits.erase(sign, (first == std::string::npos ? digits.size() - 1 : first) - sign);
  return Integer(digits);
}

} // namespace

BigValue BigValue::ratio(long long num, long long den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  return BigValue(Rational(num, den));
}

BigValue BigValue::parse(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) throw ParseError("empty number");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num = parse_integer(trim(s.substr(0, slash)));
    Integer den = parse_integer(trim(s.substr(slash + 1)));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return BigValue(Rational(num, den));
  }
  if (looks_like_integer(s)) return BigValue(Rational(parse_integer(s)));
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' ||
          c == '+' || c == 'e' || c == 'E')) {
      throw ParseError("malformed number '" + s + "'");
    }
  }
  try {
    return BigValue(Real(s));
  } catch (const std::exception&) {
    throw ParseError("malformed number '" + s + "'");
  }
}

BigValue BigValue::exact_decimal(std::string_view text) {
  std::string s = trim(text);
  bool negative = !s.empty() && s[0] == '-';
  if (negative) s.erase(0, 1);
  int exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    exponent = std::stoi(s.substr(e + 1));
    s.resize(e);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    exponent -= static_cast<int>(s.size() - dot - 1);
    s.erase(dot, 1);
  }
  Rational value(parse_integer(s.empty() ? "0" : s));
  Rational scale(boost::multiprecision::pow(Integer(10), std::abs(exponent)));
  value = exponent >= 0 ? value * scale : value / scale;
  return BigValue(negative ? Rational(-value) : value);
}

const Rational& BigValue::exact() const {
  if (!is_exact()) throw InvalidArgument("value is not exact");
  return std::get<Rational>(value_);
}

Real BigValue::to_real() const {
  if (const auto* q = std::get_if<Rational>(&value_)) {
    Real num(boost::multiprecision::numerator(*q));
    Real den(boost::multiprecision::denominator(*q));
    return num / den;
  }
  return std::get<Real>(value_);
}

double BigValue::to_double() const {
  if (const auto* q = std::get_if<Rational>(&value_)) {
    return q->convert_to<double>();
  }
  return std::get<Real>(value_).convert_to<double>();
}

bool BigValue::is_zero() const { return sign() == 0; }

int BigValue::sign() const {
  return std::visit([](const auto& v) { return v.sign(); }, value_);
}

BigValue BigValue::abs() const { return sign() < 0 ? -*this : *this; }

std::string BigValue::to_string(unsigned digits) const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->str();
  return format_real(std::get<Real>(value_), digits);
}

namespace {

template <class ExactOp, class FloatOp>
void combine(std::variant<Rational, Real>& lhs,
             const std::variant<Rational, Real>& rhs, ExactOp exact_op,
             FloatOp float_op, const BigValue& lhs_value,
             const BigValue& rhs_value) {
  if (std::holds_alternative<Rational>(lhs) &&
      std::holds_alternative<Rational>(rhs)) {
    exact_op(std::get<Rational>(lhs), std::get<Rational>(rhs));
    return;
  }
  Real a = lhs_value.to_real();
  float_op(a, rhs_value.to_real());
  lhs = std::move(a);
}

} // namespace

BigValue& BigValue::operator+=(const BigValue& rhs) {
  combine(
      value_, rhs.value_, [](Rational& a, const Rational& b) { a += b; },
      [](Real& a, const Real& b) { a += b; }, *this, rhs);
  return *this;
}

BigValue& BigValue::operator-=(const BigValue& rhs) {
  combine(
      value_, rhs.value_, [](Rational& a, const Rational& b) { a -= b; },
      [](Real& a, const Real& b) { a -= b; }, *this, rhs);
  return *this;
}

BigValue& BigValue::operator*=(const BigValue& rhs) {
  combine(
      value_, rhs.value_, [](Rational& a, const Rational& b) { a *= b; },
      [](Real& a, const Real& b) { a *= b; }, *this, rhs);
  return *this;
}

BigValue& BigValue::operator/=(const BigValue& rhs) {
  if (rhs.is_zero()) throw InvalidArgument("division by zero");
  combine(
      value_, rhs.value_, [](Rational& a, const Rational& b) { a /= b; },
      [](Real& a, const Real& b) { a /= b; }, *this, rhs);
  return *this;
}

BigValue BigValue::operator-() const {
  return std::visit([](const auto& v) { return BigValue(-v); }, value_);
}

bool operator==(const BigValue& lhs, const BigValue& rhs) {
  if (lhs.is_exact() && rhs.is_exact()) return lhs.exact() == rhs.exact();
  return lhs.to_real() == rhs.to_real();
}

std::partial_ordering operator<=>(const BigValue& lhs, const BigValue& rhs) {
  if (lhs.is_exact() && rhs.is_exact()) {
    const auto& a = lhs.exact();
    const auto& b = rhs.exact();
    if (a < b) return std::partial_ordering::less;
    if (a > b) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
  }
  Real a = lhs.to_real();
  Real b = rhs.to_real();
  if (a < b) return std::partial_ordering::less;
  if (a > b) return std::partial_ordering::greater;
  if (a == b) return std::partial_ordering::equivalent;
  return std::partial_ordering::unordered;
}

BigValue pow(const BigValue& base, unsigned exponent) {
  BigValue result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

std::string format_real(const Real& x, unsigned digits) {
  if (x == 0) return "0";
  Real magnitude = boost::multiprecision::abs(x);
  bool scientific = magnitude < Real("1e-4") || magnitude >= Real(1000000);
  if (scientific) {
    // Boost counts digits after the point in scientific mode.
    return x.str(static_cast<std::streamsize>(digits) - 1,
                 std::ios_base::scientific);
  }
  return x.str(static_cast<std::streamsize>(digits), std::ios_base::fmtflags(0));
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

} // namespace phipade
