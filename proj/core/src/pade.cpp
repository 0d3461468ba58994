#include "phipade/pade.hpp"

#include <algorithm>
#include <cmath>

#include "phipade/errors.hpp"
#include "phipade/special.hpp"

namespace phipade {

namespace mp = boost::multiprecision;

namespace {

template <class T>
using Matrix = std::vector<std::vector<T>>;

Real magnitude(const Rational& x) { return BigValue(x).abs().to_real(); }
Real magnitude(const Real& x) { return mp::abs(x); }

// Gaussian elimination. Exact: first nonzero pivot. Float: full pivoting,
// singular when the best pivot drops below `singular_tol` times the largest
// entry of the original matrix.
template <class T>
std::optional<std::vector<T>> solve_linear(Matrix<T> a, std::vector<T> b,
                                           const Real& singular_tol) {
  const std::size_t n = b.size();
  constexpr bool exact = std::is_same_v<T, Rational>;
  std::vector<std::size_t> col(n);
  for (std::size_t i = 0; i < n; ++i) col[i] = i;

  Real scale = 0;
  if constexpr (!exact) {
    for (const auto& row : a)
      for (const auto& x : row) scale = std::max<Real>(scale, magnitude(x));
    if (scale == 0) return std::nullopt;
  }

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k, pc = k;
    if constexpr (exact) {
      bool found = false;
      for (std::size_t c = k; c < n && !found; ++c) {
        for (std::size_t r = k; r < n; ++r) {
          if (a[r][col[c]] != 0) {
            pr = r;
            pc = c;
            found = true;
            break;
          }
        }
      }
      if (!found) return std::nullopt;
    } else {
      Real best = -1;
      for (std::size_t r = k; r < n; ++r) {
        for (std::size_t c = k; c < n; ++c) {
          Real m = magnitude(a[r][col[c]]);
          if (m > best) {
            best = m;
            pr = r;
            pc = c;
          }
        }
      }
      if (best <= singular_tol * scale) return std::nullopt;
    }
    std::swap(a[k], a[pr]);
    std::swap(b[k], b[pr]);
    std::swap(col[k], col[pc]);
    const T pivot = a[k][col[k]];
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a[r][col[k]] == 0) continue;
      T factor = a[r][col[k]] / pivot;
      for (std::size_t c = k; c < n; ++c) a[r][col[c]] -= factor * a[k][col[c]];
      b[r] -= factor * b[k];
    }
  }
  std::vector<T> x(n);
  for (std::size_t k = n; k-- > 0;) {
    T acc = b[k];
    for (std::size_t c = k + 1; c < n; ++c) acc -= a[k][col[c]] * x[col[c]];
    x[col[k]] = acc / a[k][col[k]];
  }
  return x;
}

template <class T>
bool negligible(const T& value, const Real& scale, const Real& tol) {
  if constexpr (std::is_same_v<T, Rational>) {
    (void)scale;
    (void)tol;
    return value == 0;
  } else {
    return mp::abs(value) <= tol * scale;
  }
}

template <class T>
struct RawPade {
  std::vector<T> p;
  std::vector<T> q;
};

// [L, M] Pade with L = n-1 from c_0 .. c_{2n-1}: returns nullopt when the
// M x M system is singular or the remaining 2n - (L+M+1) orders are not
// reproduced.
template <class T>
std::optional<RawPade<T>> pade_lm(const std::vector<T>& c, int n, int m,
                                  const Real& singular_tol, const Real& tol) {
  const int l = n - 1;
  auto at = [&](int k) -> T { return k < 0 ? T(0) : c[static_cast<std::size_t>(k)]; };

  std::vector<T> q(static_cast<std::size_t>(m + 1), T(0));
  q[0] = T(1);
  if (m > 0) {
    Matrix<T> a(static_cast<std::size_t>(m), std::vector<T>(static_cast<std::size_t>(m)));
    std::vector<T> b(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
      const int k = l + 1 + r;
      for (int i = 1; i <= m; ++i) a[r][static_cast<std::size_t>(i - 1)] = at(k - i);
      b[static_cast<std::size_t>(r)] = -at(k);
    }
    auto sol = solve_linear<T>(std::move(a), std::move(b), singular_tol);
    if (!sol) return std::nullopt;
    for (int i = 1; i <= m; ++i) q[static_cast<std::size_t>(i)] = (*sol)[static_cast<std::size_t>(i - 1)];
  }
  // Orders beyond those fixed by the system must vanish too.
  for (int k = l + m + 1; k <= 2 * n - 1; ++k) {
    T acc(0);
    Real scale = 0;
    for (int i = 0; i <= m; ++i) {
      T term = q[static_cast<std::size_t>(i)] * at(k - i);
      scale += magnitude(term);
      acc += term;
    }
    if (!negligible(acc, scale, tol)) return std::nullopt;
  }
  std::vector<T> p(static_cast<std::size_t>(l + 1), T(0));
  for (int j = 0; j <= l; ++j) {
    T acc(0);
    Real scale = 0;
    for (int i = 0; i <= std::min(j, m); ++i) {
      T term = q[static_cast<std::size_t>(i)] * at(j - i);
      scale += magnitude(term);
      acc += term;
    }
    // rounding residue of a coefficient that cancels
    if (m < n && negligible(acc, scale, tol)) acc = T(0);
    p[static_cast<std::size_t>(j)] = acc;
  }
  return RawPade<T>{std::move(p), std::move(q)};
}

template <class T>
PadeApproximant pade_typed(const std::vector<T>& c, int n, const Context& ctx, const Context& judge) {
  const Real singular_tol = ctx.simplicity_tolerance();
  const Real tol = judge.tolerance();
  auto to_poly = [](const std::vector<T>& v) {
    std::vector<BigValue> out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return Polynomial(std::move(out));
  };
  for (int m = n; m >= 0; --m) {
    auto raw = pade_lm<T>(c, n, m, singular_tol, tol);
    if (!raw) continue;
    PadeApproximant out;
    out.numerator = to_poly(raw->p);
    out.denominator = to_poly(raw->q);
    out.order = n;
    out.exact_termination = out.denominator.degree() < n;
    return out;
  }
  throw DegeneratePade("[" + std::to_string(n - 1) + "," + std::to_string(n) +
                       "] system is singular and the series is not a rational "
                       "function of lower type");
}

} // namespace

PadeApproximant pade_n1n(const PowerSeries& series, int n, const Context& ctx) {
  return pade_n1n(series, n, ctx, ctx);
}

PadeApproximant pade_n1n(const PowerSeries& series, int n, const Context& ctx,
                         const Context& judge) {
  if (n < 1) throw InvalidArgument("Pade order must be >= 1");
  const auto needed = static_cast<std::size_t>(2 * n);
  if (series.size() < needed) {
    throw InvalidArgument("[" + std::to_string(n - 1) + "," + std::to_string(n) +
                          "] needs " + std::to_string(needed) +
                          " coefficients, series has " + std::to_string(series.size()));
  }
  ScopedPrecision guard(ctx);
  bool exact = true;
  for (std::size_t k = 0; k < needed; ++k) exact = exact && series[k].is_exact();
  if (exact) {
    std::vector<Rational> c;
    for (std::size_t k = 0; k < needed; ++k) c.push_back(series[k].exact());
    return pade_typed(c, n, ctx, judge);
  }
  std::vector<Real> c;
  for (std::size_t k = 0; k < needed; ++k) c.push_back(series[k].to_real());

  // Work with c_k / rho^k, rho the mean growth rate, so that the pivot test
  // sees singularity rather than a steep geometric trend; then map z back.
  Real rho = 1;
  std::size_t first = needed, last = needed;
  for (std::size_t k = 0; k < needed; ++k) {
    if (c[k] == 0) continue;
    if (first == needed) first = k;
    last = k;
  }
  if (first != needed && last > first) {
    rho = mp::pow(mp::abs(c[last] / c[first]), Real(1) / static_cast<int>(last - first));
  }
  Real power = 1;
  for (auto& x : c) {
    x /= power;
    power *= rho;
  }
  PadeApproximant out = pade_typed(c, n, ctx, judge);
  auto unscale = [&](const Polynomial& poly) {
    std::vector<BigValue> v;
    Real factor = 1;
    for (const auto& x : poly.coeffs()) {
      v.emplace_back(x.to_real() * factor);
      factor *= rho;
    }
    return Polynomial(std::move(v));
  };
  out.numerator = unscale(out.numerator);
  out.denominator = unscale(out.denominator);
  return out;
}

namespace {

std::vector<BigComplex> aberth(const std::vector<BigComplex>& a, const Context& ctx) {
  const int n = static_cast<int>(a.size()) - 1;
  auto eval = [&](const BigComplex& z, BigComplex& value, BigComplex& deriv) {
    value = a[static_cast<std::size_t>(n)];
    deriv = BigComplex();
    for (int k = n - 1; k >= 0; --k) {
      deriv = deriv * z + value;
      value = value * z + a[static_cast<std::size_t>(k)];
    }
  };

  // Initial guesses on a circle of radius |a0/an|^(1/n), rotated off the axes.
  Real radius = mp::pow(abs(a[0]) / abs(a[static_cast<std::size_t>(n)]), Real(1) / n);
  if (radius == 0) radius = 1;
  std::vector<BigComplex> z;
  const Real two_pi = 2 * pi();
  for (int i = 0; i < n; ++i) {
    Real angle = two_pi * i / n + Real("0.4");
    z.push_back(BigComplex::polar(radius, angle));
  }

  const Real stop = pow10(-static_cast<int>(ctx.digits()) + 2);
  int settled = 0;
  for (int iter = 0; iter < 2000; ++iter) {
    Real worst = 0;
    for (int i = 0; i < n; ++i) {
      BigComplex value, deriv;
      eval(z[static_cast<std::size_t>(i)], value, deriv);
      if (value.is_zero()) continue;
      BigComplex ratio = value / deriv;
      BigComplex sum;
      for (int j = 0; j < n; ++j) {
        if (j != i) sum += BigComplex(1) / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
      }
      BigComplex step = ratio / (BigComplex(1) - ratio * sum);
      z[static_cast<std::size_t>(i)] -= step;
      Real size = std::max<Real>(abs(z[static_cast<std::size_t>(i)]), Real(1));
      worst = std::max<Real>(worst, abs(step) / size);
    }
    if (worst <= stop) {
      // A couple of extra sweeps polish the last digits.
      if (++settled >= 2) return z;
    }
  }
  return z;
}

} // namespace

std::vector<BigComplex> poly_roots(const Polynomial& q, const Context& ctx) {
  if (q.degree() < 1) throw InvalidArgument("poly_roots needs a nonconstant polynomial");
  ScopedPrecision guard(ctx);
  const int n = q.degree();
  std::vector<BigComplex> roots;
  if (n == 1) {
    roots.emplace_back((-q[0] / q[1]).to_real());
  } else {
    std::vector<BigComplex> a;
    for (const auto& c : q.coeffs()) a.emplace_back(c.to_real());
    roots = aberth(a, ctx);
  }

  const Real tol = ctx.tolerance();
  std::string failures;
  for (const auto& r : roots) {
    Real residual = abs(q(r));
    Real scale = q.magnitude_at(r);
    if (residual > tol * scale) {
      failures += " |Q(" + to_string(r, 12) + ")|/scale=" + format_real(residual / scale, 6);
    }
  }
  if (!failures.empty()) throw RootFindingFailure("residuals above tolerance:" + failures);

  // Real coefficients: snap near-real roots onto the axis and make complex
  // roots exact conjugate pairs.
  const Real snap = ctx.simplicity_tolerance();
  for (auto& r : roots) {
    if (mp::abs(r.im) <= snap * std::max<Real>(abs(r), Real(1))) {
      // Newton polish on the real line.
      Polynomial d = q.derivative();
      for (int it = 0; it < 3; ++it) {
        BigComplex x(r.re);
        BigComplex fx = q(x), dx = d(x);
        if (dx.is_zero()) break;
        r = BigComplex((x - fx / dx).re);
      }
      r.im = 0;
    }
  }
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i] || roots[i].im <= 0) continue;
    std::size_t best = roots.size();
    Real best_dist = 0;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j == i || used[j] || roots[j].im >= 0) continue;
      Real dist = abs(roots[j] - conj(roots[i]));
      if (best == roots.size() || dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    if (best != roots.size()) {
      used[i] = used[best] = true;
      roots[best] = conj(roots[i]);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const BigComplex& x, const BigComplex& y) {
    if (x.re != y.re) return x.re < y.re;
    return x.im < y.im;
  });
  return roots;
}

BigComplex PartialFraction::operator()(const BigComplex& z) const {
  BigComplex acc;
  for (std::size_t k = polynomial.size(); k-- > 0;) {
    acc *= z;
    acc.re += polynomial[k].to_real();
  }
  for (std::size_t j = 0; j < poles.size(); ++j) acc += residues[j] / (z - poles[j]);
  return acc;
}

std::vector<BigComplex> PartialFraction::taylor(std::size_t count) const {
  // r / (z - p) = sum_k (-r / p) (1/p)^k z^k
  std::vector<BigComplex> out(count);
  for (std::size_t k = 0; k < count && k < polynomial.size(); ++k) out[k].re = polynomial[k].to_real();
  for (std::size_t j = 0; j < poles.size(); ++j) {
    BigComplex inv = BigComplex(1) / poles[j];
    BigComplex term = -residues[j] * inv;
    for (std::size_t k = 0; k < count; ++k) {
      out[k] += term;
      term *= inv;
    }
  }
  return out;
}

namespace {

// If `root` is a rational root of the exact polynomial q, return it. Any
// rational root p/s in lowest terms has s dividing the leading coefficient of
// the integer-scaled polynomial, so root * lead must round to an integer.
std::optional<Rational> recover_rational_root(const Polynomial& q, const BigComplex& root,
                                              const Context& ctx) {
  if (root.im != 0) return std::nullopt;
  Integer common = 1;
  for (const auto& c : q.coeffs()) common = mp::lcm(common, mp::denominator(c.exact()));
  Rational lead_q = q.coeffs().back().exact() * Rational(common);
  Integer lead = mp::abs(mp::numerator(lead_q));
  // The float root must resolve 1/lead with room to spare.
  if (Real(lead) > pow10(static_cast<int>(ctx.digits()) - 10)) return std::nullopt;
  Real scaled = root.re * Real(lead);
  Integer num(mp::round(scaled).convert_to<Integer>());
  Rational candidate(num, lead);
  if (q(BigValue(candidate)).is_zero()) return candidate;
  return std::nullopt;
}

} // namespace

PartialFraction partial_fractions(const Polynomial& p, const Polynomial& q,
                                  const Context& ctx) {
  return partial_fractions(p, q, ctx, ctx);
}

PartialFraction partial_fractions(const Polynomial& p, const Polynomial& q,
                                  const Context& ctx, const Context& judge) {
  if (q.is_zero()) throw InvalidArgument("zero denominator polynomial");
  ScopedPrecision guard(ctx);
  PartialFraction out;
  Polynomial numerator = p;
  if (p.degree() >= q.degree()) {
    auto [quot, rem] = p.divide(q);
    out.polynomial = quot.coeffs();
    numerator = rem;
  }
  if (q.degree() < 1) {
    if (p.is_exact() && q.is_exact()) {
      out.exact_poles.emplace();
      out.exact_residues.emplace();
    }
    return out;
  }

  out.poles = poly_roots(q, ctx);
  const Real simple = ctx.simplicity_tolerance();
  for (std::size_t i = 0; i < out.poles.size(); ++i) {
    for (std::size_t j = i + 1; j < out.poles.size(); ++j) {
      Real dist = abs(out.poles[i] - out.poles[j]);
      if (dist < simple * std::max<Real>(Real(1), abs(out.poles[i]))) {
        throw MultiplePoleError("poles " + to_string(out.poles[i], 15) + " and " +
                                to_string(out.poles[j], 15) + " coincide");
      }
    }
  }

  const Polynomial dq = q.derivative();
  if (numerator.is_exact() && q.is_exact()) {
    std::vector<Rational> zs, rs;
    for (const auto& z : out.poles) {
      auto exact = recover_rational_root(q, z, ctx);
      if (!exact) break;
      BigValue zv(*exact);
      BigValue rv = numerator(zv) / dq(zv);
      zs.push_back(*exact);
      rs.push_back(rv.exact());
    }
    if (zs.size() == out.poles.size()) {
      out.exact_poles = zs;
      out.exact_residues = rs;
      for (std::size_t j = 0; j < zs.size(); ++j) {
        out.poles[j] = BigComplex(BigValue(zs[j]).to_real());
      }
    }
  }
  out.residues.clear();
  if (out.exact_residues) {
    for (const auto& r : *out.exact_residues) out.residues.emplace_back(BigValue(r).to_real());
  } else {
    for (const auto& z : out.poles) out.residues.push_back(numerator(z) / dq(z));
  }

  // Reconstruction check at probe points away from the poles.
  Real reach = 1;
  for (const auto& z : out.poles) reach = std::max<Real>(reach, abs(z));
  const BigComplex probes[] = {
      {Real("0.31"), Real("0.77")},  {Real("-0.53"), Real("0.29")},
      {Real("0.67"), Real("-0.41")}, {Real("-0.19"), Real("-0.83")},
      {Real("1.13"), Real("0.07")},
  };
  const Real tol = judge.tolerance();
  for (const auto& unit : probes) {
    BigComplex z = unit * reach;
    BigComplex direct = numerator(z) / q(z);
    BigComplex rebuilt = out(z);
    BigComplex poly_part;
    for (std::size_t k = out.polynomial.size(); k-- > 0;) {
      poly_part *= z;
      poly_part.re += out.polynomial[k].to_real();
    }
    rebuilt -= poly_part;
    Real scale = 0;
    for (std::size_t j = 0; j < out.poles.size(); ++j) {
      scale += abs(out.residues[j] / (z - out.poles[j]));
    }
    // Horner evaluation of N/Q loses digits when |Q(z)| is far below the
    // sum of its term magnitudes.
    const Real qz = abs(q(z));
    const Real cond = (numerator.magnitude_at(z) + abs(direct) * q.magnitude_at(z)) / qz;
    if (abs(rebuilt - direct) > tol * std::max<Real>({scale, abs(direct), cond})) {
      throw RootFindingFailure("partial fraction reconstruction mismatch at " +
                               to_string(z, 10));
    }
  }
  return out;
}

} // namespace phipade
