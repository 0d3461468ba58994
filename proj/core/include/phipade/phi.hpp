#pragma once

#include <vector>

#include "phipade/big_complex.hpp"
#include "phipade/big_value.hpp"
#include "phipade/quadrature.hpp"

namespace phipade {

// Parameters of the matching function
//
//   Phi(z) = z^-a U(a, 1+a-b, 1/z) ~ sum_k f_k (-z)^k,  f_k = (a)_k (b)_k / k!,
//
// and of its Gevrey-1/m average Phi_mu^(1/m), whose coefficients are
// f_{mu + m k}. a = b = 1, m = 1 is plain Borel summation.
struct PhiSpec {
  BigValue a{1};
  BigValue b{1};
  int m = 1;
  int mu = 0;

  void validate() const;
  bool is_exact() const { return a.is_exact() && b.is_exact(); }
};

// f_n of the base (m = 1) function.
BigValue phi_base_coefficient(const BigValue& a, const BigValue& b, unsigned n);
// f_{mu + m k}: the k-th asymptotic coefficient of Phi_mu^(1/m).
BigValue phi_fk(const PhiSpec& spec, unsigned k);

// Integral representation of the base function,
//   (1/Gamma(a)) int_0^inf e^-t t^(a-1) (1 + z t)^-b dt,   a > 0,
// evaluated by exp-sinh quadrature along a ray in the t-plane. The ray is the
// real axis while |arg z| <= pi/2 and turns away from the zero of (1 + z t)
// beyond that, balancing its distance from the zero against the decay of e^-t. Throws BranchCutError on the closed negative real axis (z != 0).
QuadratureResult phi_integral(const Real& a, const Real& b, const BigComplex& z,
                              const Context& ctx);

// Base Phi (spec.m and spec.mu are ignored). phi_eval(spec, 0) == 1.
BigComplex phi_eval(const PhiSpec& spec, const BigComplex& z, const Context& ctx = {});

// Gevrey-1/m average over the m-th roots of unity:
//   (1/m) sum_{j=1..m} w^(-mu j) Phi(-w^j e^(i pi/m) z^(1/m)) / (e^(i pi/m) z^(1/m))^mu
// with w = e^(2 pi i/m) and the principal m-th root. Equals phi_eval when
// m = 1, mu = 0.
BigComplex phi_gevrey_eval(const PhiSpec& spec, const BigComplex& z, const Context& ctx = {});

// coefficient * x^power * (log x)^log_power
struct AsymptoteTerm {
  BigComplex coefficient;
  Real power;
  int log_power = 0;
};

enum class AsymptoteKind {
  PowerPair,  // a - b not an integer: z^-b and z^-a
  LogCase,    // a == b: z^-a (log z - 2 gamma - psi(a)) / Gamma(a)
  IntegerGap, // a - b = n != 0 integer: z^-b .. z^-(a-1) powers plus a z^-a log z term
};

// Large-argument behaviour as a sum of terms, ordered from the dominant term
// down (larger power first; at equal power the log term first).
struct AsymptoteForm {
  AsymptoteKind kind = AsymptoteKind::PowerPair;
  std::vector<AsymptoteTerm> terms;

  const AsymptoteTerm& leading() const;
  BigComplex operator()(const BigComplex& x) const;
};

// Leading large-z terms of the base Phi (spec.m must be 1).
AsymptoteForm phi_asymptote(const PhiSpec& spec, const Context& ctx = {});

// Leading large-z terms of Phi_mu^(1/m), composed from phi_asymptote through
// the root-of-unity average; terms that cancel in the average are dropped.
AsymptoteForm gevrey_asymptote(const PhiSpec& spec, const Context& ctx = {});

// Accumulates terms, merging equal (power, log_power). finish() drops terms
// that cancelled to below `rel_tol` times the summed magnitude of their
// contributions, zeroes imaginary parts cancelled the same way, and sorts
// from the dominant term down.
class TermCollector {
public:
  void add(const BigComplex& coefficient, const Real& power, int log_power);
  std::vector<AsymptoteTerm> finish(const Real& rel_tol) &&;

private:
  struct Slot {
    AsymptoteTerm term;
    Real magnitude;
  };
  std::vector<Slot> slots_;
};

} // namespace phipade
