#include "phipade/phi.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "phipade/errors.hpp"
#include "phipade/special.hpp"

namespace phipade {

namespace mp = boost::multiprecision;

namespace {

constexpr unsigned kGuardDigits = 5;

Real current_simplicity_tolerance() {
  return pow10(-static_cast<int>(Real::default_precision() / 2));
}

// arg(-w^j e^(i pi/m)) / pi as a reduced fraction num/m with num in (-m, m].
int root_angle_numerator(int j, int m) {
  int num = (m + 2 * j + 1) % (2 * m);
  if (num > m) num -= 2 * m;
  return num;
}

} // namespace

void PhiSpec::validate() const {
  if (a.sign() <= 0) throw InvalidArgument("Phi parameter a must be positive, got " + a.to_string(20));
  if (b.sign() <= 0) throw InvalidArgument("Phi parameter b must be positive, got " + b.to_string(20));
  if (m < 1) throw InvalidArgument("Gevrey index m must be >= 1, got " + std::to_string(m));
  if (mu < 0 || mu >= m)
    throw InvalidArgument("mu must lie in [0, m), got mu=" + std::to_string(mu) +
                          " m=" + std::to_string(m));
}

BigValue phi_base_coefficient(const BigValue& a, const BigValue& b, unsigned n) {
  return pochhammer(a, n) * pochhammer(b, n) / BigValue(Rational(factorial(n)));
}

BigValue phi_fk(const PhiSpec& spec, unsigned k) {
  return phi_base_coefficient(spec.a, spec.b,
                              static_cast<unsigned>(spec.mu) + static_cast<unsigned>(spec.m) * k);
}

QuadratureResult phi_integral(const Real& a_in, const Real& b_in, const BigComplex& z_in,
                              const Context& ctx) {
  ScopedPrecision guard(ctx.digits() + kGuardDigits);
  if (a_in <= 0) throw InvalidArgument("integral representation needs a > 0");
  if (z_in.is_zero()) return {BigComplex(Real(1)), Real(0), 0};

  const Real a = a_in;
  const Real b = b_in;
  const BigComplex z = z_in;
  const Real theta = arg(z);
  if ((z.im == 0 && z.re < 0) ||
      abs(pi() - abs(theta)) < pow10(-static_cast<int>(ctx.digits() / 2))) {
    throw BranchCutError("argument " + to_string(z, 12) + " lies on the cut along the negative real axis");
  }
  const Real inv_gamma = 1 / gamma_fn(a);
  const Real tol = ctx.tolerance();

  QuadratureResult result;
  if (z.im == 0) {
    const Real x = z.re;
    RealIntegrand f = [&](const Real& t) -> Real {
      return mp::exp(-t + (a - 1) * mp::log(t) - b * mp::log1p(x * t));
    };
    result = integrate_half_line(f, tol);
  } else {
    // The zero of 1 + z t sits at angle pi - |theta| on the side opposite
    // the rotation; the decay of e^-t needs |phi| < pi/2. Past the imaginary
    // axis, split the difference so both margins are (3pi/2 - |theta|)/2.
    const Real half_pi = pi() / 2;
    Real phi = 0;
    if (abs(theta) > half_pi) phi = (theta > 0 ? -1 : 1) * (abs(theta) - half_pi) / 2;
    const Real c = mp::cos(phi);
    const Real s = mp::sin(phi);
    ComplexIntegrand f = [&](const Real& r) -> BigComplex {
      // t = r e^(i phi); 1 + z t
      Real tre = r * c;
      Real tim = r * s;
      Real wre = 1 + z.re * tre - z.im * tim;
      Real wim = z.re * tim + z.im * tre;
      Real log_mod = mp::log(wre * wre + wim * wim) / 2;
      Real w_arg = mp::atan2(wim, wre);
      Real lr = mp::log(r);
      Real re = -tre + (a - 1) * lr - b * log_mod;
      Real im = -tim + a * phi - b * w_arg;
      Real mag = mp::exp(re);
      return {mag * mp::cos(im), mag * mp::sin(im)};
    };
    result = integrate_half_line(f, tol);
  }
  result.value *= inv_gamma;
  result.error_estimate *= inv_gamma;
  return result;
}

BigComplex phi_eval(const PhiSpec& spec, const BigComplex& z, const Context& ctx) {
  spec.validate();
  if (z.is_zero()) return BigComplex(Real(1));
  ScopedPrecision guard(ctx.digits() + kGuardDigits);
  return phi_integral(spec.a.to_real(), spec.b.to_real(), z, ctx).value;
}

BigComplex phi_gevrey_eval(const PhiSpec& spec, const BigComplex& z, const Context& ctx) {
  spec.validate();
  if (spec.m == 1 && spec.mu == 0) return phi_eval(spec, z, ctx);
  if (z.is_zero()) {
    ScopedPrecision guard(ctx.digits() + kGuardDigits);
    return BigComplex(phi_fk(spec, 0).to_real());
  }
  ScopedPrecision guard(ctx.digits() + kGuardDigits);
  const int m = spec.m;
  const Real a = spec.a.to_real();
  const Real b = spec.b.to_real();
  const Real pi_value = pi();

  // s = e^(i pi/m) z^(1/m); the j-th argument is -w^j s = e^(i pi num/m) z^(1/m)
  const BigComplex root = pow(z, Real(1) / m);
  const Real match_tol = pow10(-static_cast<int>(ctx.digits()) + static_cast<int>(kGuardDigits));

  std::vector<BigComplex> args;
  std::vector<BigComplex> values;
  BigComplex sum;
  for (int j = 1; j <= m; ++j) {
    const int num = root_angle_numerator(j, m);
    BigComplex x = BigComplex::polar(Real(1), pi_value * num / m) * root;
    std::optional<BigComplex> value;
    for (std::size_t i = 0; i < args.size() && !value; ++i) {
      if (abs(conj(args[i]) - x) <= match_tol * abs(x)) value = conj(values[i]);
    }
    if (!value) {
      try {
        value = phi_integral(a, b, x, ctx).value;
      } catch (const BranchCutError&) {
        throw BranchCutError("Gevrey average at z = " + to_string(z, 12) + ": term j=" +
                             std::to_string(j) + " hits the cut");
      }
      args.push_back(x);
      values.push_back(*value);
    }
    // w^(-mu j)
    BigComplex phase = BigComplex::polar(Real(1), -2 * pi_value * spec.mu * j / m);
    sum += phase * *value;
  }
  sum /= Real(m);
  if (spec.mu != 0) {
    BigComplex s = BigComplex::polar(Real(1), pi_value / m) * root;
    sum /= pow(s, spec.mu);
  }
  return sum;
}

const AsymptoteTerm& AsymptoteForm::leading() const {
  if (terms.empty()) throw InvalidArgument("asymptotic form has no terms");
  return terms.front();
}

BigComplex AsymptoteForm::operator()(const BigComplex& x) const {
  BigComplex total;
  BigComplex lx = log(x);
  for (const auto& term : terms) {
    BigComplex v = term.coefficient * pow(x, term.power);
    for (int l = 0; l < term.log_power; ++l) v *= lx;
    total += v;
  }
  return total;
}

void TermCollector::add(const BigComplex& coefficient, const Real& power, int log_power) {
  const Real same = current_simplicity_tolerance();
  Real size = abs(coefficient);
  for (auto& slot : slots_) {
    if (slot.term.log_power == log_power && abs(slot.term.power - power) <= same) {
      slot.term.coefficient += coefficient;
      slot.magnitude += size;
      return;
    }
  }
  slots_.push_back({{coefficient, power, log_power}, std::move(size)});
}

std::vector<AsymptoteTerm> TermCollector::finish(const Real& rel_tol) && {
  std::vector<AsymptoteTerm> out;
  for (auto& slot : slots_) {
    const Real cut = rel_tol * slot.magnitude;
    if (abs(slot.term.coefficient) <= cut) continue;
    if (abs(slot.term.coefficient.im) <= cut) slot.term.coefficient.im = 0;
    if (abs(slot.term.coefficient.re) <= cut) slot.term.coefficient.re = 0;
    out.push_back(std::move(slot.term));
  }
  std::stable_sort(out.begin(), out.end(), [](const AsymptoteTerm& l, const AsymptoteTerm& r) {
    if (l.power != r.power) return l.power > r.power;
    return l.log_power > r.log_power;
  });
  return out;
}

AsymptoteForm phi_asymptote(const PhiSpec& spec, const Context& ctx) {
  spec.validate();
  if (spec.m != 1) throw InvalidArgument("phi_asymptote describes the base function (m = 1)");
  ScopedPrecision guard(ctx.digits() + kGuardDigits);
  AsymptoteForm form;
  const BigValue gap = spec.a - spec.b;
  if (is_integer_valued(gap, ctx.simplicity_tolerance())) {
    const long n = std::lround(gap.to_double());
    if (n == 0) {
      const Real a = spec.a.to_real();
      const Real g = gamma_fn(a);
      form.kind = AsymptoteKind::LogCase;
      form.terms.push_back({BigComplex(1 / g), -a, 1});
      form.terms.push_back({BigComplex(-(2 * euler_gamma() + digamma_fn(a)) / g), -a, 0});
    } else {
      // Symmetric in a, b: take A = larger, B = smaller, gap N = A - B > 0.
      const BigValue& big = n > 0 ? spec.a : spec.b;
      const BigValue& small = n > 0 ? spec.b : spec.a;
      const unsigned N = static_cast<unsigned>(std::labs(n));
      const Real A = big.to_real();
      const Real gA = gamma_fn(A);
      form.kind = AsymptoteKind::IntegerGap;
      for (unsigned k = 1; k <= N; ++k) {
        // (k-1)! (1-A+k)_{N-k} / ((N-k)! Gamma(A)) z^(k-A)
        BigValue c = BigValue(Rational(factorial(k - 1))) *
                     pochhammer(BigValue(1) - big + BigValue(static_cast<long>(k)), N - k) /
                     BigValue(Rational(factorial(N - k)));
        form.terms.push_back({BigComplex(c.to_real() / gA), Real(static_cast<long>(k)) - A, 0});
      }
      const Real sign = (N % 2 == 1) ? Real(1) : Real(-1); // (-1)^(N+1)
      const Real C = sign / (Real(factorial(N)) * gamma_fn(small.to_real()));
      const Real psi_sum = digamma_fn(A) - digamma_fn(Real(1)) - digamma_fn(Real(N + 1));
      form.terms.push_back({BigComplex(-C), -A, 1});
      form.terms.push_back({BigComplex(C * psi_sum), -A, 0});
    }
  } else {
    const Real a = spec.a.to_real();
    const Real b = spec.b.to_real();
    form.kind = AsymptoteKind::PowerPair;
    form.terms.push_back({BigComplex(gamma_fn(a - b) / gamma_fn(a)), -b, 0});
    form.terms.push_back({BigComplex(gamma_fn(b - a) / gamma_fn(b)), -a, 0});
  }
  TermCollector collect;
  for (const auto& t : form.terms) collect.add(t.coefficient, t.power, t.log_power);
  form.terms = std::move(collect).finish(Real(0));
  return form;
}

AsymptoteForm gevrey_asymptote(const PhiSpec& spec, const Context& ctx) {
  spec.validate();
  PhiSpec base = spec;
  base.m = 1;
  base.mu = 0;
  AsymptoteForm form = phi_asymptote(base, ctx);
  if (spec.m == 1 && spec.mu == 0) return form;

  ScopedPrecision guard(ctx.digits() + kGuardDigits);
  const int m = spec.m;
  const int mu = spec.mu;
  const Real pi_value = pi();

  // Each base term c x^P (log x)^L with x = e^(i theta_j) z^(1/m) becomes
  // c e^(i P theta_j) z^(P/m) ((1/m) log z + i theta_j)^L, then is weighted by
  // w^(-mu j) / (m e^(i pi mu/m) z^(mu/m)).
  TermCollector collect;
  for (const auto& term : form.terms) {
    const Real power = (term.power - mu) / m;
    for (int j = 1; j <= m; ++j) {
      const Real theta = pi_value * root_angle_numerator(j, m) / m;
      const Real phase = -2 * pi_value * mu * j / m + term.power * theta - pi_value * mu / m;
      BigComplex f = BigComplex::polar(Real(1) / m, phase) * term.coefficient;
      if (term.log_power == 0) {
        collect.add(f, power, 0);
      } else {
        collect.add(f / Real(m), power, 1);
        collect.add(f * BigComplex(Real(0), theta), power, 0);
      }
    }
  }
  AsymptoteForm out;
  out.kind = form.kind;
  out.terms = std::move(collect).finish(ctx.tolerance());
  return out;
}

} // namespace phipade
