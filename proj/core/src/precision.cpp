#include "phipade/precision.hpp"

#include <string>

#include "phipade/errors.hpp"

namespace phipade {

Context::Context(unsigned digits) : digits_(digits) {
  if (digits < kMinimumDigits) {
    throw InvalidArgument("precision must be at least " +
                          std::to_string(kMinimumDigits) + " digits, got " +
                          std::to_string(digits));
  }
}

Real Context::tolerance() const {
  ScopedPrecision guard(*this);
  return pow10(-static_cast<int>(digits_) + 10);
}

Real Context::simplicity_tolerance() const {
  ScopedPrecision guard(*this);
  return pow10(-static_cast<int>(digits_ / 2));
}

ScopedPrecision::ScopedPrecision(const Context& ctx)
    : ScopedPrecision(ctx.digits()) {}

ScopedPrecision::ScopedPrecision(unsigned digits)
    : previous_(Real::default_precision()) {
  Real::default_precision(digits);
}

ScopedPrecision::~ScopedPrecision() { Real::default_precision(previous_); }

Real pow10(int exponent) {
  Real ten(10);
  return boost::multiprecision::pow(ten, Real(exponent));
}

} // namespace phipade
