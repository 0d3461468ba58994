#pragma once

#include "phipade/big_value.hpp"

namespace phipade {

// Scalar special functions at the current default precision. Backed by MPFR.
Real gamma_fn(const Real& x);
Real digamma_fn(const Real& x);
Real euler_gamma();
Real pi();

// Rising factorial (c)_k = c (c+1) ... (c+k-1); exact when c is exact.
BigValue pochhammer(const BigValue& c, unsigned k);

Integer factorial(unsigned n);

// True when x is an integer: exactly for rationals, within `tol` for floats.
bool is_integer_valued(const BigValue& x, const Real& tol);

} // namespace phipade
