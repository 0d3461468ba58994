#include "phipade/special.hpp"

#include <mpfr.h>

namespace phipade {

namespace mp = boost::multiprecision;

Real gamma_fn(const Real& x) {
  Real out;
  mpfr_gamma(out.backend().data(), x.backend().data(), MPFR_RNDN);
  return out;
}

Real digamma_fn(const Real& x) {
  Real out;
  mpfr_digamma(out.backend().data(), x.backend().data(), MPFR_RNDN);
  return out;
}

Real euler_gamma() {
  Real out;
  mpfr_const_euler(out.backend().data(), MPFR_RNDN);
  return out;
}

Real pi() {
  Real out;
  mpfr_const_pi(out.backend().data(), MPFR_RNDN);
  return out;
}

BigValue pochhammer(const BigValue& c, unsigned k) {
  BigValue result(1);
  for (unsigned i = 0; i < k; ++i) result *= c + BigValue(static_cast<long long>(i));
  return result;
}

Integer factorial(unsigned n) {
  Integer result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

bool is_integer_valued(const BigValue& x, const Real& tol) {
  if (x.is_exact()) return mp::denominator(x.exact()) == 1;
  Real v = x.to_real();
  return mp::abs(v - mp::round(v)) <= tol;
}

} // namespace phipade
