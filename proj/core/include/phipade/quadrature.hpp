#pragma once

#include <functional>

#include "phipade/big_complex.hpp"

namespace phipade {

struct QuadratureResult {
  BigComplex value;
  Real error_estimate;
  int levels_used = 0;
};

using ComplexIntegrand = std::function<BigComplex(const Real&)>;
using RealIntegrand = std::function<Real(const Real&)>;

inline constexpr int kDefaultQuadratureLevels = 12;

// Double-exponential (exp-sinh) quadrature of f over (0, inf):
// t = exp(pi/2 sinh u), trapezoidal rule in u with the step halved per level.
// Integrable endpoint singularities at 0 and exponential decay at infinity are
// both handled by the transformation.
//
// Stops when two successive levels agree to `tolerance * max(1, |I|)`; throws
// QuadratureError after `max_levels` halvings. Nodes are cached per thread and
// precision.
QuadratureResult integrate_half_line(const ComplexIntegrand& f, const Real& tolerance,
                                     int max_levels = kDefaultQuadratureLevels);
QuadratureResult integrate_half_line(const RealIntegrand& f, const Real& tolerance,
                                     int max_levels = kDefaultQuadratureLevels);

} // namespace phipade
