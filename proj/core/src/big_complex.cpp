#include "phipade/big_complex.hpp"

#include "phipade/big_value.hpp"

namespace phipade {

namespace mp = boost::multiprecision;

BigComplex BigComplex::polar(const Real& modulus, const Real& angle) {
  return {modulus * mp::cos(angle), modulus * mp::sin(angle)};
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  Real r = re * rhs.re - im * rhs.im;
  im = re * rhs.im + im * rhs.re;
  re = std::move(r);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
  // Smith's algorithm keeps the intermediate products in range.
  if (mp::abs(rhs.re) >= mp::abs(rhs.im)) {
    Real ratio = rhs.im / rhs.re;
    Real den = rhs.re + rhs.im * ratio;
    Real r = (re + im * ratio) / den;
    im = (im - re * ratio) / den;
    re = std::move(r);
  } else {
    Real ratio = rhs.re / rhs.im;
    Real den = rhs.re * ratio + rhs.im;
    Real r = (re * ratio + im) / den;
    im = (im * ratio - re) / den;
    re = std::move(r);
  }
  return *this;
}

BigComplex& BigComplex::operator*=(const Real& rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}

BigComplex& BigComplex::operator/=(const Real& rhs) {
  re /= rhs;
  im /= rhs;
  return *this;
}

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

Real abs(const BigComplex& z) { return mp::hypot(z.re, z.im); }

Real norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

Real arg(const BigComplex& z) { return mp::atan2(z.im, z.re); }

BigComplex exp(const BigComplex& z) {
  return BigComplex::polar(mp::exp(z.re), z.im);
}

BigComplex log(const BigComplex& z) { return {mp::log(abs(z)), arg(z)}; }

BigComplex sqrt(const BigComplex& z) {
  if (z.is_zero()) return {};
  Real modulus = abs(z);
  Real r = mp::sqrt((modulus + mp::abs(z.re)) / 2);
  if (z.re >= 0) return {r, z.im / (2 * r)};
  Real i = z.im >= 0 ? r : Real(-r);
  return {mp::abs(z.im) / (2 * r), i};
}

BigComplex pow(const BigComplex& z, const Real& p) {
  if (z.is_zero()) {
    return p == 0 ? BigComplex(1) : BigComplex();
  }
  return exp(log(z) * p);
}

BigComplex pow(const BigComplex& z, const BigComplex& p) {
  if (z.is_zero()) {
    return p.is_zero() ? BigComplex(1) : BigComplex();
  }
  return exp(log(z) * p);
}

BigComplex pow(const BigComplex& z, int n) {
  if (n < 0) return BigComplex(1) / pow(z, -n);
  BigComplex result(1);
  BigComplex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

Real relative_difference(const BigComplex& a, const BigComplex& b) {
  Real diff = abs(a - b);
  Real scale = abs(b);
  return scale == 0 ? diff : Real(diff / scale);
}

std::string to_string(const BigComplex& z, unsigned digits) {
  std::string out = format_real(z.re, digits);
  if (z.im != 0) {
    out += z.im < 0 ? " - " : " + ";
    out += format_real(mp::abs(z.im), digits) + "i";
  }
  return out;
}

} // namespace phipade
