#pragma once

// Reference values computed without the library's numerics: Boost's exp-sinh
// quadrature, plain power series at raised precision, hand-derived closed
// forms.

#include <functional>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/bernoulli.hpp>

#include "phipade/big_complex.hpp"
#include "phipade/big_value.hpp"

namespace ref {

using phipade::BigComplex;
using phipade::Real;
namespace mp = boost::multiprecision;

inline Real tol_digits(int d) { return phipade::pow10(-d); }

// int_0^inf f(t) dt by Boost exp-sinh at the current precision.
inline Real laplace(const std::function<Real(const Real&)>& f) {
  boost::math::quadrature::exp_sinh<Real> integrator;
  Real eps = phipade::pow10(-static_cast<int>(Real::default_precision()) + 5);
  return integrator.integrate([&](const Real& t) -> Real { return f(t); }, eps);
}

// (1/Gamma(a)) int_0^inf e^-t t^(a-1) (1 + z t)^-b dt along the real axis, z
// off the negative real axis.
inline BigComplex phi_direct(const Real& a, const Real& b, const BigComplex& z) {
  const Real ga = mp::tgamma(a);
  auto part = [&](bool imag) {
    return laplace([&](const Real& t) -> Real {
      Real wre = 1 + z.re * t;
      Real wim = z.im * t;
      Real mod = mp::pow(wre * wre + wim * wim, -b / 2);
      Real ang = -b * mp::atan2(wim, wre);
      Real base = mp::exp(-t) * mp::pow(t, a - 1) * mod;
      return base * (imag ? mp::sin(ang) : mp::cos(ang));
    });
  };
  return BigComplex(part(false) / ga, z.im == 0 ? Real(0) : part(true) / ga);
}

// E1(w) = -gamma - log w - sum_k (-w)^k / (k k!), principal log, summed at
// whatever precision the caller set (use plenty for |w| of order 10).
inline BigComplex e1_series(const BigComplex& w) {
  BigComplex sum(0);
  BigComplex term(1);
  const Real eps = phipade::pow10(-static_cast<int>(Real::default_precision()));
  const Real size = phipade::abs(w);
  for (int k = 1; k < 10000; ++k) {
    term = term * (-w) / Real(k);
    BigComplex add = term / Real(k);
    sum += add;
    if (phipade::abs(add) < eps * phipade::abs(sum) && k > size) break;
  }
  return BigComplex(-boost::math::constants::euler<Real>()) - phipade::log(w) - sum;
}

// B_2n from Boost (its own tabulation / asymptotic algorithm).
inline Real bernoulli_2n(int n) { return boost::math::bernoulli_b2n<Real>(n); }

} // namespace ref
