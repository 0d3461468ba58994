#include "phipade/oracles.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "phipade/errors.hpp"
#include "phipade/quadrature.hpp"
#include "phipade/series.hpp"
#include "phipade/special.hpp"

namespace phipade {

namespace mp = boost::multiprecision;

namespace {

constexpr unsigned kGuardDigits = 20;

// Kummer M(alpha, beta, s) by its power series.
Real kummer_m(const Real& alpha, const Real& beta, const Real& s, const Real& eps) {
  Real sum = 1;
  Real term = 1;
  for (int k = 0; k < 100000; ++k) {
    term *= (alpha + k) / (beta + k) * s / (k + 1);
    sum += term;
    if (abs(term) <= eps * abs(sum)) return sum;
  }
  throw QuadratureError("Kummer series did not converge");
}

bool near_integer(const Real& x, const Real& tol) { return abs(x - mp::round(x)) <= tol; }

} // namespace

Real zero_dim_Z(const Real& g, const Context& ctx) {
  if (g < 0) throw InvalidArgument("zero_dim_Z needs g >= 0");
  ScopedPrecision guard(ctx.digits() + 5);
  if (g == 0) return Real(1);
  const Real c = g / 24;
  RealIntegrand f = [&](const Real& x) -> Real {
    Real x2 = x * x;
    return mp::exp(-x2 / 2 - c * x2 * x2);
  };
  // even integrand: 2 / sqrt(2 pi) = sqrt(2 / pi)
  return integrate_half_line(f, ctx.tolerance()).value.re * mp::sqrt(2 / pi());
}

Real eh_lagrangian(const Real& g, const Context& ctx) {
  if (g <= 0) throw InvalidArgument("eh_lagrangian needs g > 0");
  // coth s - 1/s - s/3 cancels to O(s^3); the guard digits absorb the loss
  // just above the Taylor cutoff.
  ScopedPrecision guard(ctx.digits() + kGuardDigits);
  const Real cutoff("0.01");
  const unsigned taylor_terms = ctx.digits() / 4 + 6;
  const std::vector<Rational> bern = bernoulli_table(2 * taylor_terms + 6);
  // h(s) = (coth s - 1/s - s/3) / s^2 = sum_{n>=2} 2^(2n) B_2n s^(2n-3) / (2n)!
  std::vector<Real> taylor;
  for (unsigned n = 2; n < taylor_terms + 2; ++n) {
    Rational c = bern[2 * n] * Rational(Integer(1) << (2 * n)) / Rational(factorial(2 * n));
    taylor.push_back(BigValue(c).to_real());
  }
  auto h = [&](const Real& s) -> Real {
    if (s < cutoff) {
      Real s2 = s * s;
      Real acc = 0;
      for (auto it = taylor.rbegin(); it != taylor.rend(); ++it) acc = acc * s2 + *it;
      return acc * s;
    }
    Real coth = 1 + 2 / mp::expm1(2 * s);
    return (coth - 1 / s - s / 3) / (s * s);
  };
  // s = g t
  RealIntegrand f = [&](const Real& t) -> Real { return mp::exp(-t) * h(g * t); };
  return g * integrate_half_line(f, ctx.tolerance()).value.re;
}

Real confluent_u(const Real& alpha_in, const Real& beta_in, const Real& s_in, const Context& ctx) {
  ScopedPrecision guard(ctx.digits() + 5);
  const Real alpha = alpha_in, beta = beta_in, s = s_in;
  if (s <= 0) throw InvalidArgument("confluent_u needs s > 0");
  const Real tol = ctx.tolerance();
  if (alpha == 0) return Real(1);
  if (alpha < 0) {
    // U(alpha, beta, s) = s^(1-beta) U(alpha-beta+1, 2-beta, s)
    const Real alpha2 = alpha - beta + 1;
    if (alpha2 < 0) {
      throw UnsupportedDegenerateCase("U(alpha, beta, s) with alpha and alpha-beta+1 both negative");
    }
    return mp::pow(s, 1 - beta) * confluent_u(alpha2, 2 - beta, s, ctx);
  }
  if (s < 1 && !near_integer(beta, pow10(-static_cast<int>(ctx.digits() / 2)))) {
    const Real eps = tol * pow10(-10);
    Real first = gamma_fn(1 - beta) / gamma_fn(alpha - beta + 1) * kummer_m(alpha, beta, s, eps);
    Real second = gamma_fn(beta - 1) / gamma_fn(alpha) * mp::pow(s, 1 - beta) *
                  kummer_m(alpha - beta + 1, 2 - beta, s, eps);
    return first + second;
  }
  // U(alpha, beta, s) = s^-alpha Phi_{alpha, 1+alpha-beta}(1/s)
  return mp::pow(s, -alpha) * phi_integral(alpha, 1 + alpha - beta, BigComplex(1 / s), ctx).value.re;
}

std::function<BigComplex(const BigComplex&)> inverse_transform(TransformedFunction fhat,
                                                               const PhiSpec& spec,
                                                               const Context& ctx) {
  spec.validate();
  if (spec.m != 1 || spec.mu != 0) throw InvalidArgument("inverse_transform needs m = 1, mu = 0");
  return [fhat = std::move(fhat), spec, ctx](const BigComplex& z) -> BigComplex {
    ScopedPrecision guard(ctx.digits() + 5);
    Real a = spec.a.to_real();
    Real b = spec.b.to_real();
    // The transform is symmetric in a and b. Prefer b = 1 (trivial kernel),
    // then b < 1 (kernel parameter 1 - b > 0).
    if (a == 1 || (b > 1 && a < b)) std::swap(a, b);
    const Real norm = 1 / (gamma_fn(a) * gamma_fn(b));
    const bool trivial = (b == 1);
    const Real alpha = 1 - b;
    const Real beta = a - b + 1;
    ComplexIntegrand f = [&](const Real& s) -> BigComplex {
      Real weight = mp::exp(-s + (a - 1) * mp::log(s));
      if (!trivial) weight *= confluent_u(alpha, beta, s, ctx);
      return fhat(z * s) * weight;
    };
    return integrate_half_line(f, ctx.tolerance()).value * norm;
  };
}

long double anharmonic_ground_state(long double harmonic, int power, long double g) {
  if (power != 4 && power != 6) throw InvalidArgument("power must be 4 or 6");
  if (g < 0) throw InvalidArgument("coupling must be non-negative");
  using Matrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  const int k = power / 2;

  // Basis frequency from minimizing <0|H|0>:
  //   E(W) = W/4 + harmonic/(4W) + g (2k-1)!! / (2W)^k
  long double double_fact = 1;
  for (int j = 2 * k - 1; j > 1; j -= 2) double_fact *= j;
  auto trial = [&](long double W) {
    return W / 4 + harmonic / (4 * W) + g * double_fact / std::pow(2 * W, static_cast<long double>(k));
  };
  long double lo = -10, hi = 10; // log W
  for (int it = 0; it < 200; ++it) {
    long double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    if (trial(std::exp(m1)) < trial(std::exp(m2))) hi = m2; else lo = m1;
  }
  const long double W = std::exp((lo + hi) / 2);
  const long double L2 = 1 / W; // length^2

  auto ground = [&](int n_even) {
    const int full = 2 * n_even + power + 2;
    using Sparse = Eigen::SparseMatrix<long double>;
    std::vector<Eigen::Triplet<long double>> entries;
    for (int n = 0; n < full; ++n) {
      entries.emplace_back(n, n, L2 * (2 * n + 1) / 2);
      if (n + 2 < full) {
        long double off = L2 * std::sqrt(static_cast<long double>(n + 1) * (n + 2)) / 2;
        entries.emplace_back(n, n + 2, off);
        entries.emplace_back(n + 2, n, off);
      }
    }
    Sparse x2(full, full);
    x2.setFromTriplets(entries.begin(), entries.end());
    Sparse xp = x2;
    for (int j = 1; j < k; ++j) xp = (xp * x2).pruned();
    Matrix h = Matrix::Zero(n_even, n_even);
    for (int i = 0; i < n_even; ++i) {
      for (int j = std::max(0, i - k); j <= std::min(n_even - 1, i + k); ++j) {
        const int n = 2 * i, m = 2 * j;
        long double p2 = 0;
        if (n == m) p2 = (2 * n + 1) / (2 * L2);
        else if (m == n + 2) p2 = -std::sqrt(static_cast<long double>(n + 1) * (n + 2)) / (2 * L2);
        else if (n == m + 2) p2 = -std::sqrt(static_cast<long double>(m + 1) * (m + 2)) / (2 * L2);
        h(i, j) = p2 / 2 + harmonic * x2.coeff(n, m) / 2 + g * xp.coeff(n, m);
      }
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
  };

  int n_even = 64;
  long double previous = ground(n_even);
  while (n_even < 1024) {
    n_even *= 2;
    long double current = ground(n_even);
    if (std::fabs(current - previous) < 1e-10L) return current;
    previous = current;
  }
  throw QuadratureError("oscillator diagonalization did not converge");
}

Real oscillator_energy(int power, const Real& g) {
  if (g < 0) throw InvalidArgument("oscillator_energy needs g >= 0");
  if (g == 0) return Real(1) / 2;
  return Real(anharmonic_ground_state(1.0L, power, g.convert_to<long double>()));
}

Real pure_oscillator_energy(int power) {
  return Real(anharmonic_ground_state(0.0L, power, 1.0L));
}

} // namespace phipade
