#pragma once

#include <string>

#include "phipade/precision.hpp"

namespace phipade {

// Complex number over MPFR reals. std::complex is unspecified for
// non-arithmetic element types, so the handful of operations the library
// needs live here.
struct BigComplex {
  Real re;
  Real im;

  BigComplex() : re(0), im(0) {}
  BigComplex(Real r) : re(std::move(r)), im(0) {}
  BigComplex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(int r) : re(r), im(0) {}

  static BigComplex polar(const Real& modulus, const Real& angle);

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);
  BigComplex& operator*=(const Real& rhs);
  BigComplex& operator/=(const Real& rhs);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const Real& b) { return a *= b; }
  friend BigComplex operator*(const Real& b, BigComplex a) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const Real& b) { return a /= b; }
  BigComplex operator-() const { return {-re, -im}; }

  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

BigComplex conj(const BigComplex& z);
Real abs(const BigComplex& z);
Real norm(const BigComplex& z); // |z|^2
Real arg(const BigComplex& z);  // principal, in (-pi, pi]
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z); // principal branch
BigComplex sqrt(const BigComplex& z);
BigComplex pow(const BigComplex& z, const Real& p);   // principal branch
BigComplex pow(const BigComplex& z, const BigComplex& p);
BigComplex pow(const BigComplex& z, int n);            // exact repeated product

// |a - b| / |b|, or |a - b| when b is zero.
Real relative_difference(const BigComplex& a, const BigComplex& b);

std::string to_string(const BigComplex& z, unsigned digits);

} // namespace phipade
