#pragma once

#include <optional>
#include <vector>

#include "phipade/polynomial.hpp"
#include "phipade/series.hpp"

namespace phipade {

struct PadeApproximant {
  Polynomial numerator;   // degree <= n-1 (or the exact polynomial on termination)
  Polynomial denominator; // denominator(0) == 1
  int order = 0;          // the requested n
  // Set when the series is reproduced by a rational function of lower type
  // (including a plain polynomial); the numerator/denominator are that
  // function and deg(denominator) < n.
  bool exact_termination = false;
};

// [n-1, n] Pade approximant of the first 2n coefficients of `series`.
// Exact rational arithmetic when every coefficient is exact, otherwise
// Gaussian elimination with full pivoting at the context precision.
// Throws DegeneratePade when the linear system is singular and no lower-type
// rational function reproduces the 2n coefficients.
PadeApproximant pade_n1n(const PowerSeries& series, int n, const Context& ctx = {});
// Same, with the arithmetic at ctx precision but the singularity and
// termination tests at judge's tolerances: lets callers add guard digits
// without demanding more accuracy than float inputs carry.
PadeApproximant pade_n1n(const PowerSeries& series, int n, const Context& ctx,
                         const Context& judge);

// All complex roots of a nonconstant polynomial by Aberth-Ehrlich iteration.
// Roots of real polynomials are returned as exact conjugate pairs (or with
// zero imaginary part), sorted by real then imaginary part.
std::vector<BigComplex> poly_roots(const Polynomial& q, const Context& ctx = {});

// P(z)/Q(z) = polynomial(z) + sum_j residues[j] / (z - poles[j]).
struct PartialFraction {
  std::vector<BigComplex> poles;
  std::vector<BigComplex> residues;
  // Polynomial part, nonempty only when deg P >= deg Q (exact termination).
  std::vector<BigValue> polynomial;
  // Present when every pole is rational and P, Q are exact.
  std::optional<std::vector<Rational>> exact_poles;
  std::optional<std::vector<Rational>> exact_residues;

  int n() const noexcept { return static_cast<int>(poles.size()); }
  BigComplex operator()(const BigComplex& z) const;
  // Taylor coefficients at the origin, k = 0 .. count-1.
  std::vector<BigComplex> taylor(std::size_t count) const;
};

// Throws MultiplePoleError when two poles of Q coincide within
// 10^-(digits/2) * max(1, |z|).
PartialFraction partial_fractions(const Polynomial& p, const Polynomial& q,
                                  const Context& ctx = {});
// Roots at ctx precision, reconstruction check at judge's tolerance.
PartialFraction partial_fractions(const Polynomial& p, const Polynomial& q,
                                  const Context& ctx, const Context& judge);

} // namespace phipade
