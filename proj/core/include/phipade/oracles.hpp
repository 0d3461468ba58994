#pragma once

#include <functional>

#include "phipade/big_complex.hpp"
#include "phipade/phi.hpp"

namespace phipade {

// Reference computations that do not go through the Pade pipeline.

// (1/sqrt(2 pi)) int exp(-x^2/2 - g x^4/24) dx, g >= 0.
Real zero_dim_Z(const Real& g, const Context& ctx = {});

// int_0^inf exp(-s/g) (coth s - 1/s - s/3) ds / s^2, g > 0.
Real eh_lagrangian(const Real& g, const Context& ctx = {});

// Tricomi U(alpha, beta, s) for s > 0: Kummer series below s = 1 (non-integer
// beta), integral representation above; U(0, beta, s) = 1. Negative alpha is
// reduced by the Kummer transformation when that makes it positive.
Real confluent_u(const Real& alpha, const Real& beta, const Real& s, const Context& ctx = {});

using TransformedFunction = std::function<BigComplex(const BigComplex&)>;

// Inverse of the Phi transform (spec.m must be 1):
//   psi(z) = 1/(Gamma(a) Gamma(b)) int_0^inf fhat(z s) e^-s s^(a-1) U(1-b, a-b+1, s) ds,
// with a and b swapped when that makes the kernel simpler. For b = 1 the
// kernel is 1 (Borel-Leroy).
std::function<BigComplex(const BigComplex&)> inverse_transform(TransformedFunction fhat,
                                                               const PhiSpec& spec,
                                                               const Context& ctx = {});

// Ground state of -1/2 d^2/dx^2 + harmonic x^2/2 + g x^power (power 4 or 6)
// by diagonalization in a harmonic-oscillator basis of even states. The
// basis starts at 64 states and doubles until the eigenvalue moves by less
// than 1e-10.
long double anharmonic_ground_state(long double harmonic, int power, long double g);

// E(g) for -1/2 d^2/dx^2 + x^2/2 + g x^power, g >= 0.
Real oscillator_energy(int power, const Real& g);

// Ground state of -1/2 d^2/dx^2 + x^power: the large-g coefficient of
// E(g) / g^(2/(power+2)).
Real pure_oscillator_energy(int power);

} // namespace phipade
