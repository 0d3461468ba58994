#include "phipade/approximant.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "phipade/errors.hpp"
#include "phipade/special.hpp"

namespace phipade {

namespace mp = boost::multiprecision;

namespace {

constexpr unsigned kGuardDigits = 5;
constexpr unsigned kPadeGuardDigits = 20;

bool exact_path(const PhiPadeApproximant& ap) {
  if (!ap.pf.exact_poles || !ap.pf.exact_residues || !ap.spec.is_exact()) return false;
  for (const auto& c : ap.pf.polynomial)
    if (!c.is_exact()) return false;
  return true;
}

struct Expansion {
  std::vector<BigValue> coeffs;
  std::vector<Real> magnitude; // sum of |contributions|, the scale of each coefficient
};

Expansion expand(const PhiPadeApproximant& ap, std::size_t K) {
  Expansion out;
  const auto& poly = ap.pf.polynomial;
  if (exact_path(ap)) {
    const auto& zs = *ap.pf.exact_poles;
    const auto& rs = *ap.pf.exact_residues;
    std::vector<Rational> weight(zs.size()), inv(zs.size());
    for (std::size_t j = 0; j < zs.size(); ++j) {
      weight[j] = -rs[j] / zs[j];
      inv[j] = 1 / zs[j];
    }
    for (std::size_t k = 0; k < K; ++k) {
      Rational t = k < poly.size() ? poly[k].exact() : Rational(0);
      Real mag = abs(BigValue(t).to_real());
      for (std::size_t j = 0; j < zs.size(); ++j) {
        t += weight[j];
        mag += abs(BigValue(weight[j]).to_real());
        weight[j] *= inv[j];
      }
      const BigValue f = phi_fk(ap.spec, static_cast<unsigned>(k));
      out.coeffs.emplace_back(BigValue(t) * f);
      out.magnitude.push_back(mag * abs(f.to_real()));
    }
    return out;
  }
  const std::size_t np = ap.pf.poles.size();
  std::vector<BigComplex> weight(np), inv(np);
  for (std::size_t j = 0; j < np; ++j) {
    weight[j] = -ap.pf.residues[j] / ap.pf.poles[j];
    inv[j] = BigComplex(Real(1)) / ap.pf.poles[j];
  }
  for (std::size_t k = 0; k < K; ++k) {
    BigComplex t = k < poly.size() ? BigComplex(poly[k].to_real()) : BigComplex();
    Real mag = abs(t);
    for (std::size_t j = 0; j < np; ++j) {
      t += weight[j];
      mag += abs(weight[j]);
      weight[j] *= inv[j];
    }
    const Real f = phi_fk(ap.spec, static_cast<unsigned>(k)).to_real();
    out.coeffs.emplace_back(t.re * f);
    out.magnitude.push_back(mag * abs(f));
  }
  return out;
}

} // namespace

PowerSeries phi_transform(const PowerSeries& series, const PhiSpec& spec) {
  spec.validate();
  PowerSeries out;
  out.transform = series.transform;
  out.label = series.label;
  out.coeffs.reserve(series.size());
  for (std::size_t k = 0; k < series.size(); ++k) {
    const BigValue f = phi_fk(spec, static_cast<unsigned>(k));
    if (f.is_zero()) throw InvalidArgument("Phi coefficient f_" + std::to_string(k) + " vanishes");
    out.coeffs.push_back(series[k] / f);
  }
  return out;
}

Real default_summability_angle() { return pi() / 12; }

std::vector<SummabilityWarning> check_summability(const PartialFraction& pf, const Real& angle) {
  std::vector<SummabilityWarning> out;
  for (std::size_t j = 0; j < pf.poles.size(); ++j) {
    if (abs(arg(pf.poles[j])) < angle) {
      out.push_back({j, pf.poles[j],
                     "pole " + to_string(pf.poles[j], 12) +
                         " lies near the positive real axis; the Laplace ray is obstructed"});
    }
  }
  return out;
}

PhiPadeApproximant build(const PowerSeries& series, const PhiSpec& spec, int n,
                         const Context& ctx) {
  spec.validate();
  series.validate();
  if (n < 1) throw InvalidArgument("order n must be >= 1");
  if (series.size() < static_cast<std::size_t>(2 * n)) {
    throw InvalidArgument("order n=" + std::to_string(n) + " needs " + std::to_string(2 * n) +
                          " coefficients, the series has " + std::to_string(series.size()));
  }
  // Roots of the higher-order denominators are ill-conditioned; the extra
  // digits keep the re-expansion within the working tolerance.
  const Context inner(ctx.digits() + kPadeGuardDigits);
  ScopedPrecision guard(inner);
  const PowerSeries head = series.prefix(2 * static_cast<std::size_t>(n));
  const PowerSeries transformed = phi_transform(head, spec);
  const PadeApproximant pade = pade_n1n(transformed, n, inner, ctx);

  PhiPadeApproximant ap;
  ap.spec = spec;
  ap.pf = partial_fractions(pade.numerator, pade.denominator, inner, ctx);
  ap.transform = series.transform;
  ap.n = n;
  ap.warnings = check_summability(ap.pf);

  const Real err = matching_error(ap, head, ctx);
  const bool exact = exact_path(ap) && head.is_exact();
  if ((exact && err != 0) || (!exact && err > ctx.tolerance())) {
    throw MatchingViolation("re-expansion misses the input coefficients by " + format_real(err, 6));
  }
  return ap;
}

BigComplex evaluate(const PhiPadeApproximant& ap, const BigComplex& g, const Context& ctx) {
  ScopedPrecision guard(ctx.digits() + kGuardDigits);
  const auto& tr = ap.transform;
  const BigComplex w = BigComplex(tr.scale.to_real()) * pow(g, tr.power);
  const bool real_input = g.is_real();

  BigComplex psi;
  std::vector<BigComplex> terms;
  terms.reserve(ap.pf.poles.size());
  for (std::size_t j = 0; j < ap.pf.poles.size(); ++j) {
    const BigComplex& z = ap.pf.poles[j];
    const BigComplex& r = ap.pf.residues[j];
    std::optional<BigComplex> term;
    if (real_input) {
      for (std::size_t i = 0; i < j && !term; ++i) {
        if (ap.pf.poles[i] == conj(z) && ap.pf.residues[i] == conj(r)) term = conj(terms[i]);
      }
    }
    if (!term) {
      BigComplex x = -w / z;
      term = (-r / z) * phi_gevrey_eval(ap.spec, x, ctx);
    }
    terms.push_back(*term);
    psi += *term;
  }
  const auto& poly = ap.pf.polynomial;
  BigComplex wk(Real(1));
  for (std::size_t k = 0; k < poly.size(); ++k) {
    psi += BigComplex(poly[k].to_real() * phi_fk(ap.spec, static_cast<unsigned>(k)).to_real()) * wk;
    wk *= w;
  }
  BigComplex value = BigComplex(tr.subtract.to_real());
  value += pow(g, tr.divide_power) * psi;
  return value;
}

Real evaluate_real(const PhiPadeApproximant& ap, const Real& g, const Context& ctx) {
  return evaluate(ap, BigComplex(g), ctx).re;
}

PowerSeries reexpand(const PhiPadeApproximant& ap, std::size_t K, const Context& ctx) {
  if (K < 1) throw InvalidArgument("re-expansion needs K >= 1");
  ScopedPrecision guard(ctx);
  PowerSeries out;
  out.coeffs = expand(ap, K).coeffs;
  out.transform = ap.transform;
  out.label = "re-expansion";
  return out;
}

Real matching_error(const PhiPadeApproximant& ap, const PowerSeries& series, const Context& ctx) {
  ScopedPrecision guard(ctx);
  const std::size_t K = std::min<std::size_t>(2 * static_cast<std::size_t>(ap.n), series.size());
  const Expansion e = expand(ap, K);
  Real worst(0);
  for (std::size_t k = 0; k < K; ++k) {
    const BigValue diff = e.coeffs[k] - series[k];
    if (diff.is_zero()) continue;
    Real scale = std::max<Real>(abs(series[k].to_real()), e.magnitude[k]);
    if (scale == 0) scale = 1;
    worst = std::max<Real>(worst, abs(diff.to_real()) / scale);
  }
  return worst;
}

AsymptoteForm asymptote(const PhiPadeApproximant& ap, const Context& ctx) {
  ScopedPrecision guard(ctx.digits() + kGuardDigits);
  const AsymptoteForm phi = gevrey_asymptote(ap.spec, ctx);
  const auto& tr = ap.transform;
  const BigComplex alpha(tr.scale.to_real());
  const BigComplex log_alpha = log(alpha);
  const Real q(tr.power);
  const Real p(tr.divide_power);

  // Terms of psi in w, then w = alpha g^q and the g^p prefactor.
  TermCollector in_w;
  for (std::size_t j = 0; j < ap.pf.poles.size(); ++j) {
    const BigComplex u = BigComplex(Real(-1)) / ap.pf.poles[j];
    const BigComplex weight = -ap.pf.residues[j] / ap.pf.poles[j];
    const BigComplex log_u = log(u);
    for (const auto& t : phi.terms) {
      BigComplex c = weight * t.coefficient * pow(u, t.power);
      if (t.log_power == 0) {
        in_w.add(c, t.power, 0);
      } else {
        in_w.add(c, t.power, 1);
        in_w.add(c * log_u, t.power, 0);
      }
    }
  }
  const auto& poly = ap.pf.polynomial;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    in_w.add(BigComplex(poly[k].to_real() * phi_fk(ap.spec, static_cast<unsigned>(k)).to_real()),
             Real(static_cast<long>(k)), 0);
  }
  const Real tol = ctx.tolerance();
  TermCollector in_g;
  for (const auto& t : std::move(in_w).finish(tol)) {
    BigComplex c = t.coefficient * pow(alpha, t.power);
    const Real power = p + q * t.power;
    if (t.log_power == 0) {
      in_g.add(c, power, 0);
    } else {
      in_g.add(c * q, power, 1);
      in_g.add(c * log_alpha, power, 0);
    }
  }
  if (!tr.subtract.is_zero()) in_g.add(BigComplex(tr.subtract.to_real()), Real(0), 0);

  AsymptoteForm out;
  out.kind = phi.kind;
  out.terms = std::move(in_g).finish(tol);
  return out;
}

Real fit_b(const PowerSeries& series, const BigValue& a, int n, const BigValue& target,
           const Real& lo, const Real& hi, const Context& ctx, double tol) {
  ScopedPrecision guard(ctx);
  if (!(lo < hi)) throw InvalidArgument("fit_b bracket must satisfy lo < hi");
  const Real goal = target.to_real();
  auto residual = [&](const Real& b) -> Real {
    PhiSpec spec;
    spec.a = a;
    spec.b = BigValue(b);
    return asymptote(build(series, spec, n, ctx), ctx).leading().coefficient.re - goal;
  };
  Real x0 = lo, x1 = hi;
  Real f0 = residual(x0), f1 = residual(x1);
  if (f0 == 0) return x0;
  if (f1 == 0) return x1;
  if ((f0 < 0) == (f1 < 0)) {
    throw FitBracketError("leading coefficient minus target has the same sign at b=" +
                          format_real(lo, 10) + " and b=" + format_real(hi, 10));
  }
  // Illinois: regula falsi with the stale endpoint's value halved.
  const Real step_tol(tol / 10);
  Real previous = x1;
  for (int iter = 0; iter < 200; ++iter) {
    Real x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
    Real f2 = residual(x2);
    if (f2 == 0) return x2;
    if ((f2 < 0) != (f1 < 0)) {
      x0 = x1;
      f0 = f1;
    } else {
      f0 /= 2;
    }
    x1 = x2;
    f1 = f2;
    if (abs(x1 - x0) < tol || abs(x2 - previous) < step_tol) return x2;
    previous = x2;
  }
  throw FitBracketError("no convergence in 200 iterations");
}

std::pair<BigValue, BigValue> match_growth(const BigValue& p) {
  if (!(p > BigValue(-2))) throw InvalidArgument("growth exponent p must exceed -2");
  BigValue a = (p + BigValue(2)) / BigValue(2);
  return {a, a};
}

Real find_root(const PhiPadeApproximant& ap, const Real& lo_in, const Real& hi_in,
               const Context& ctx, double tol) {
  ScopedPrecision guard(ctx);
  Real lo = lo_in, hi = hi_in;
  if (!(lo < hi)) throw InvalidArgument("root bracket must satisfy lo < hi");
  Real flo = evaluate_real(ap, lo, ctx);
  Real fhi = evaluate_real(ap, hi, ctx);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo < 0) == (fhi < 0)) {
    throw RootBracketError("no sign change on [" + format_real(lo, 10) + ", " +
                           format_real(hi, 10) + "]");
  }
  while (hi - lo >= Real(tol)) {
    Real mid = (lo + hi) / 2;
    Real fmid = evaluate_real(ap, mid, ctx);
    if (fmid == 0) return mid;
    if ((fmid < 0) == (flo < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

} // namespace phipade
