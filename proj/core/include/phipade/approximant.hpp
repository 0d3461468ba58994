#pragma once

#include <string>
#include <utility>
#include <vector>

#include "phipade/pade.hpp"
#include "phipade/phi.hpp"
#include "phipade/series.hpp"

namespace phipade {

struct SummabilityWarning {
  std::size_t pole_index = 0;
  BigComplex pole;
  std::string message;
};

// psi(w) = sum_j (r_j / -z_j) Phi_mu^(1/m)(-w / z_j) + polynomial part,
// value(g) = subtract + g^divide_power psi(scale g^power).
struct PhiPadeApproximant {
  PhiSpec spec;
  PartialFraction pf;
  TransformSpec transform;
  int n = 0;
  std::vector<SummabilityWarning> warnings;
};

// d_k / f_{mu + m k}.
PowerSeries phi_transform(const PowerSeries& series, const PhiSpec& spec);

// pi/12 at the current precision.
Real default_summability_angle();

// One warning per pole with |arg z_j| < angle: such a pole sits on or near the
// positive real axis and obstructs the Laplace ray.
std::vector<SummabilityWarning> check_summability(const PartialFraction& pf,
                                                  const Real& angle = default_summability_angle());

// phi_transform -> [n-1, n] Pade -> poles -> partial fractions. Verifies that
// the result re-expands to the first 2n input coefficients (exactly on the
// rational path) and throws MatchingViolation otherwise.
PhiPadeApproximant build(const PowerSeries& series, const PhiSpec& spec, int n,
                         const Context& ctx = {});

// The physical value at coupling g.
BigComplex evaluate(const PhiPadeApproximant& approx, const BigComplex& g,
                    const Context& ctx = {});
Real evaluate_real(const PhiPadeApproximant& approx, const Real& g, const Context& ctx = {});

// First K coefficients of psi. Exact when the poles, residues and Phi
// parameters are rational.
PowerSeries reexpand(const PhiPadeApproximant& approx, std::size_t K, const Context& ctx = {});

// Largest relative deviation of reexpand(approx, 2n) from `series`
// (0 when they agree exactly).
Real matching_error(const PhiPadeApproximant& approx, const PowerSeries& series,
                    const Context& ctx = {});

// Large-g behaviour of the evaluated approximant, in powers of g (and log g),
// the transform undone. terms.front() is the dominant one.
AsymptoteForm asymptote(const PhiPadeApproximant& approx, const Context& ctx = {});

// b such that the leading large-g coefficient of build(series, (a, b), n)
// equals `target`. Illinois iteration on [lo, hi] to |db| < tol.
Real fit_b(const PowerSeries& series, const BigValue& a, int n, const BigValue& target,
           const Real& lo, const Real& hi, const Context& ctx = {}, double tol = 1e-8);

// a = b = (p + 2) / 2, so that f_k ~ k! k^p / (Gamma(a) Gamma(b)).
std::pair<BigValue, BigValue> match_growth(const BigValue& p);

// Bisection root of evaluate_real on [lo, hi], to a bracket narrower than tol.
Real find_root(const PhiPadeApproximant& approx, const Real& lo, const Real& hi,
               const Context& ctx = {}, double tol = 1e-6);

} // namespace phipade
