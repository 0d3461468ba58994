#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "phipade/big_value.hpp"

namespace phipade {

// How the stored coefficients relate to the physical coupling g:
//
//   value(g) = subtract + g^divide_power * psi(w),   w = scale * g^power,
//
// where psi(w) = sum_k coeffs[k] w^k is the series actually summed.
struct TransformSpec {
  BigValue subtract{0};
  int divide_power = 0;
  BigValue scale{1};
  int power = 1;

  bool is_identity() const;
  void validate() const;
};

struct PowerSeries {
  std::vector<BigValue> coeffs;
  TransformSpec transform;
  std::string label;

  std::size_t size() const noexcept { return coeffs.size(); }
  const BigValue& operator[](std::size_t k) const { return coeffs.at(k); }
  bool is_exact() const;
  // First `count` coefficients, same transform and label.
  PowerSeries prefix(std::size_t count) const;
  void validate() const;
};

// B_n with B_1 = -1/2.
Rational bernoulli(unsigned n);
// B_0 .. B_{count-1} in one pass of the recurrence.
std::vector<Rational> bernoulli_table(unsigned count);

// Spinor Euler-Heisenberg Lagrangian in a magnetic background, as a series
// in w = g^2 after factoring out g^2: coeffs[k] multiplies g^(2k+2).
PowerSeries euler_heisenberg_series(std::size_t count);

// Zero-dimensional phi^4 partition function Z(g), in powers of g.
PowerSeries zero_dim_partition_series(std::size_t count);

// Ground-state Rayleigh-Schroedinger coefficients E^(0..count-1) of
// -1/2 d^2/dx^2 + x^2/2 + g x^4 (quartic) and + g x^6 (sextic).
PowerSeries quartic_rspt_series(std::size_t count);
PowerSeries sextic_rspt_series(std::size_t count);

// Ground-state RSPT for the perturbation g x^(2 * half_power), exact.
std::vector<Rational> anharmonic_rspt(unsigned half_power, std::size_t count);

// The eight published beta-function coefficients for d=3 phi^4 theory.
PowerSeries beta_function_series();

// (E(g) - d_0) / g: drops d_0, shifts the remaining coefficients down and
// records subtract = d_0, divide_power = 1 so evaluation rebuilds E(g).
PowerSeries subtract_leading(const PowerSeries& series);

} // namespace phipade
