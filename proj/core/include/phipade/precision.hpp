#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace phipade {

// Expression templates are off: values are stored in `auto` all over the
// numerical code and the lazy types would dangle.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<
    boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

inline constexpr unsigned kDefaultDigits = 50;
inline constexpr unsigned kMinimumDigits = 20;

// Working precision in decimal digits. Every public entry point that creates
// floating values takes a Context and opens a ScopedPrecision for its body.
class Context {
public:
  Context() = default;
  explicit Context(unsigned digits);

  unsigned digits() const noexcept { return digits_; }

  // 10^-(digits-10): the residual/agreement tolerance used throughout.
  Real tolerance() const;
  // 10^-(digits/2): separation below which two roots count as coincident.
  Real simplicity_tolerance() const;

private:
  unsigned digits_ = kDefaultDigits;
};

// Sets the MPFR default precision for new values created in the current
// scope and restores the previous value on exit. Values keep the precision
// they were created with; arithmetic results take the larger operand
// precision.
class ScopedPrecision {
public:
  explicit ScopedPrecision(const Context& ctx);
  explicit ScopedPrecision(unsigned digits);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
  unsigned previous_;
};

// Power of ten at the current default precision.
Real pow10(int exponent);

} // namespace phipade
