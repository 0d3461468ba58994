#include <random>

#include <gtest/gtest.h>

#include "phipade/approximant.hpp"
#include "phipade/errors.hpp"
#include "phipade/oracles.hpp"
#include "phipade/special.hpp"
#include "reference.hpp"

using namespace phipade;

namespace {

PhiSpec spec(BigValue a, BigValue b, int m = 1, int mu = 0) {
  PhiSpec s;
  s.a = std::move(a);
  s.b = std::move(b);
  s.m = m;
  s.mu = mu;
  return s;
}

PowerSeries series_of(std::vector<BigValue> c) {
  PowerSeries s;
  s.coeffs = std::move(c);
  return s;
}

const Context kCtx(50);
const PhiSpec kBorel = spec(1, 1);
const PhiSpec kQuartic = spec(BigValue::ratio(2, 3), 1);
const PhiSpec kZeroDim = spec(BigValue::ratio(3, 4), BigValue::ratio(1, 4));
const PhiSpec kEh = spec(2, 1, 2, 0);

PowerSeries quartic(std::size_t count) { return subtract_leading(quartic_rspt_series(count + 1)); }

// (3/4)(4/21)^(2/3) Gamma(1/3)
Real quartic_large_g_coefficient() {
  return Real(3) / 4 * pow(Real(4) / 21, Real(2) / 3) * gamma_fn(Real(1) / 3);
}

} // namespace

TEST(Transform, DividesByPhiCoefficients) {
  const PowerSeries t = phi_transform(quartic(2), kQuartic);
  EXPECT_EQ(t[0].exact(), Rational(3, 4));
  EXPECT_EQ(t[1].exact(), Rational(-63, 16));
}

TEST(Transform, BorelCaseDividesByFactorial) {
  const PowerSeries s = quartic(6);
  const PowerSeries t = phi_transform(s, kBorel);
  for (unsigned k = 0; k < s.size(); ++k)
    EXPECT_EQ(t[k].exact(), s[k].exact() / Rational(factorial(k))) << k;
}

TEST(Transform, ZeroSeries) {
  const PowerSeries t = phi_transform(series_of({0, 0, 0}), kQuartic);
  for (unsigned k = 0; k < 3; ++k) EXPECT_TRUE(t[k].is_zero());
}

TEST(Build, ZeroDimExactPole) {
  const auto ap = build(zero_dim_partition_series(2), kZeroDim, 1, kCtx);
  ASSERT_TRUE(ap.pf.exact_poles);
  EXPECT_EQ((*ap.pf.exact_poles)[0], Rational(-3, 2));
  EXPECT_EQ((*ap.pf.exact_residues)[0], Rational(3, 2));
}

TEST(Build, QuarticExactPole) {
  const auto ap = build(quartic(2), kQuartic, 1, kCtx);
  EXPECT_EQ((*ap.pf.exact_poles)[0], Rational(-4, 21));
  EXPECT_EQ((*ap.pf.exact_residues)[0], Rational(1, 7));
}

TEST(Build, EulerHeisenbergExactPole) {
  const auto ap = build(euler_heisenberg_series(2), kEh, 1, kCtx);
  EXPECT_EQ((*ap.pf.exact_poles)[0], Rational(-21, 2));
  EXPECT_EQ((*ap.pf.exact_residues)[0], Rational(-7, 30));
}

TEST(Build, NeedsTwoNCoefficients) {
  EXPECT_THROW(build(quartic(3), kQuartic, 2, kCtx), InvalidArgument);
}

TEST(Build, DegenerateBetaOrderOne) {
  // d_0 = 0: the [0,1] system has no solution
  EXPECT_THROW(build(beta_function_series(), kBorel, 1, kCtx), DegeneratePade);
}

TEST(Evaluate, ZeroCouplingGivesLeadingCoefficient) {
  ScopedPrecision p(kCtx);
  const auto ap = build(quartic(4), kQuartic, 2, kCtx);
  EXPECT_EQ(evaluate_real(ap, Real(0), kCtx), Real("0.5"));
  const auto z = build(zero_dim_partition_series(2), kZeroDim, 1, kCtx);
  EXPECT_EQ(evaluate_real(z, Real(0), kCtx), Real(1));
}

TEST(Evaluate, ZeroDimIsExact) {
  ScopedPrecision p(kCtx);
  const auto ap = build(zero_dim_partition_series(2), kZeroDim, 1, kCtx);
  for (const char* gs : {"0.1", "1", "10"}) {
    const Real g(gs);
    EXPECT_LT(abs(evaluate_real(ap, g, kCtx) - zero_dim_Z(g, kCtx)), ref::tol_digits(20)) << gs;
  }
}

TEST(Evaluate, QuarticStrongCoupling) {
  ScopedPrecision p(kCtx);
  const auto ap = build(quartic(2), kQuartic, 1, kCtx);
  // corrections are relative g^(-1/3)
  const Real g("1e12");
  const Real ratio = evaluate_real(ap, g, kCtx) / cbrt(g);
  EXPECT_LT(abs(ratio - quartic_large_g_coefficient()), Real("1e-5"));
}

TEST(Reexpand, QuarticOrderOne) {
  const auto ap = build(quartic(2), kQuartic, 1, kCtx);
  const PowerSeries r = reexpand(ap, 2, kCtx);
  EXPECT_EQ(r[0].exact(), Rational(3, 4));
  EXPECT_EQ(r[1].exact(), Rational(-21, 8));
}

TEST(Reexpand, EulerHeisenbergFirstTwoTerms) {
  const auto ap = build(euler_heisenberg_series(2), kEh, 1, kCtx);
  const PowerSeries r = reexpand(ap, 2, kCtx);
  EXPECT_EQ(r[0].exact(), Rational(-1, 45));
  EXPECT_EQ(r[1].exact(), Rational(4, 315));
  EXPECT_EQ(r.transform.divide_power, 2);
}

TEST(Reexpand, SyntheticOrderOne) {
  const PowerSeries s = series_of({BigValue::ratio(5, 3), BigValue::ratio(-2, 7)});
  const auto ap = build(s, spec(BigValue::ratio(1, 2), BigValue::ratio(9, 4)), 1, kCtx);
  EXPECT_EQ(matching_error(ap, s, kCtx), 0);
}

TEST(Asymptote, QuarticCubeRoot) {
  ScopedPrecision p(kCtx);
  const AsymptoteForm form = asymptote(build(quartic(2), kQuartic, 1, kCtx), kCtx);
  EXPECT_LT(abs(form.leading().power - Real(1) / 3), kCtx.tolerance());
  EXPECT_LT(abs(form.leading().coefficient.re - quartic_large_g_coefficient()), kCtx.tolerance());
  EXPECT_LT(abs(form.leading().coefficient.re - Real("0.665147")), Real("5e-7"));
}

TEST(Asymptote, EulerHeisenbergLogarithm) {
  ScopedPrecision p(kCtx);
  const AsymptoteForm form = asymptote(build(euler_heisenberg_series(2), kEh, 1, kCtx), kCtx);
  EXPECT_EQ(form.leading().power, 0);
  EXPECT_EQ(form.leading().log_power, 1);
  EXPECT_LT(abs(form.leading().coefficient.re + Real(7) / 30), kCtx.tolerance());
}

TEST(Asymptote, SexticQuarterPower) {
  ScopedPrecision p(kCtx);
  const PowerSeries s = subtract_leading(sextic_rspt_series(3));
  const AsymptoteForm form = asymptote(build(s, spec(BigValue::ratio(3, 2), 1, 2, 0), 1, kCtx), kCtx);
  EXPECT_LT(abs(form.leading().power - Real(1) / 4), kCtx.tolerance());
}

TEST(FitB, QuarticGroundState) {
  ScopedPrecision p(kCtx);
  const Real b = fit_b(quartic(2), BigValue::ratio(2, 3), 1, BigValue::exact_decimal("0.667986259155777"),
                       Real("0.9"), Real("1.1"), kCtx);
  EXPECT_LT(abs(b - Real("0.9977547")), Real("1e-6"));
}

TEST(FitB, FixedPointAtBOne) {
  ScopedPrecision p(kCtx);
  const Real b = fit_b(quartic(2), BigValue::ratio(2, 3), 1, BigValue(quartic_large_g_coefficient()),
                       Real("0.9"), Real("1.1"), kCtx);
  EXPECT_LT(abs(b - 1), Real("1e-8"));
}

TEST(FitB, TargetFromDiagonalization) {
  ScopedPrecision p(kCtx);
  const Real eps = pure_oscillator_energy(4);
  const Real b = fit_b(quartic(2), BigValue::ratio(2, 3), 1, BigValue(eps), Real("0.9"), Real("1.1"), kCtx);
  EXPECT_LT(abs(b - Real("0.9977547")), Real("1e-5"));
}

TEST(FitB, NoSignChange) {
  ScopedPrecision p(kCtx);
  EXPECT_THROW(fit_b(quartic(2), BigValue::ratio(2, 3), 1, BigValue::exact_decimal("0.667986"),
                     Real("1.5"), Real("2"), kCtx),
               FitBracketError);
}

TEST(MatchGrowth, KnownCases) {
  auto [a, b] = match_growth(BigValue::ratio(7, 2));
  EXPECT_EQ(a.exact(), Rational(11, 4));
  EXPECT_EQ(b.exact(), Rational(11, 4));
  EXPECT_EQ(match_growth(BigValue(0)).first.exact(), Rational(1));
  EXPECT_EQ(match_growth(BigValue(1)).second.exact(), Rational(3, 2));
  EXPECT_THROW(match_growth(BigValue(-2)), InvalidArgument);
}

TEST(MatchGrowth, StirlingRatio) {
  // f_k / (k! k^(a+b-2)) -> 1/(Gamma(a) Gamma(b)), O(1/k) corrections
  ScopedPrecision p(kCtx);
  for (const BigValue& growth : {BigValue(1), BigValue::ratio(7, 2)}) {
    auto [a, b] = match_growth(growth);
    const unsigned k = 50;
    const Real fk = phi_fk(spec(a, b), k).to_real();
    const Real ratio = fk / (Real(factorial(k)) * pow(Real(k), growth.to_real()));
    const Real expected = 1 / (gamma_fn(a.to_real()) * gamma_fn(b.to_real()));
    EXPECT_LT(abs(ratio / expected - 1), Real("0.15")) << growth.to_string(5);
  }
}

TEST(FindRoot, BetaFunctionZero) {
  ScopedPrecision p(kCtx);
  auto [a, b] = match_growth(BigValue::ratio(7, 2));
  const auto ap = build(beta_function_series(), spec(a, b), 4, kCtx);
  const Real root = find_root(ap, Real(1), Real(2), kCtx);
  EXPECT_LT(abs(root - Real("1.4192")), Real("5e-4"));
}

TEST(FindRoot, SyntheticLine) {
  ScopedPrecision p(kCtx);
  const auto ap = build(series_of({1, -1, 0, 0}), kBorel, 2, kCtx);
  EXPECT_LT(abs(find_root(ap, Real("0.3"), Real("2.5"), kCtx) - 1), Real("1e-6"));
  EXPECT_THROW(find_root(ap, Real(2), Real(3), kCtx), RootBracketError);
}

TEST(Summability, BetaBorelPoleOnPositiveAxis) {
  ScopedPrecision p(kCtx);
  const auto ap = build(beta_function_series(), kBorel, 4, kCtx);
  ASSERT_EQ(ap.warnings.size(), 1u);
  EXPECT_LT(abs(ap.warnings[0].pole.re - Real("17.34418")), Real("1e-3"));
  EXPECT_EQ(check_summability(ap.pf).size(), 1u);
}

TEST(Summability, EulerHeisenbergPolesAreClean) {
  const auto ap = build(euler_heisenberg_series(8), kEh, 4, kCtx);
  EXPECT_TRUE(ap.warnings.empty());
  EXPECT_TRUE(check_summability(PartialFraction{}).empty());
}

TEST(Properties, MatchingOnRandomSeries) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 12);
  const std::vector<PhiSpec> specs = {kBorel, kQuartic, kZeroDim, kEh, spec(BigValue::ratio(3, 2), 1, 2, 1),
                                      spec(BigValue::ratio(5, 2), BigValue::ratio(1, 3), 3, 2)};
  int built = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 4;
    std::vector<BigValue> c;
    for (int k = 0; k < 2 * n; ++k) c.push_back(BigValue::ratio(num(rng), den(rng)));
    if (c[0].is_zero()) c[0] = BigValue(1);
    const PowerSeries s = series_of(c);
    const PhiSpec& sp = specs[trial % specs.size()];
    try {
      const auto ap = build(s, sp, n, kCtx);
      // exact only when the poles come out rational
      if (ap.pf.exact_poles)
        EXPECT_EQ(matching_error(ap, s, kCtx), 0) << trial;
      else
        EXPECT_LT(matching_error(ap, s, kCtx), kCtx.tolerance()) << trial;
      ++built;
    } catch (const MultiplePoleError&) {
    } catch (const DegeneratePade&) {
    } catch (const RootFindingFailure&) {
    }
  }
  EXPECT_GT(built, 50);
}

TEST(Properties, MatchingOnFloatSeries) {
  ScopedPrecision p(kCtx);
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> dist(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 5;
    std::vector<BigValue> c;
    for (int k = 0; k < 2 * n; ++k) c.emplace_back(Real(dist(rng)) / 7);
    const PowerSeries s = series_of(c);
    try {
      const auto ap = build(s, trial % 2 ? kQuartic : kEh, n, kCtx);
      EXPECT_LT(matching_error(ap, s, kCtx), kCtx.tolerance()) << trial;
    } catch (const MultiplePoleError&) {
    }
  }
}

TEST(Properties, ScalingCovariance) {
  ScopedPrecision p(kCtx);
  const PowerSeries base = series_of(quartic(4).coeffs);
  const Rational lambda(5, 2);
  std::vector<BigValue> scaled;
  Rational lk = 1;
  for (const auto& d : base.coeffs) {
    scaled.push_back(d * BigValue(lk));
    lk *= lambda;
  }
  const auto ap = build(base, kQuartic, 2, kCtx);
  const auto sc = build(series_of(scaled), kQuartic, 2, kCtx);
  const Real lam = BigValue(lambda).to_real();
  ASSERT_EQ(sc.pf.n(), 2);
  for (int j = 0; j < 2; ++j)
    EXPECT_LT(relative_difference(sc.pf.poles[j] * lam, ap.pf.poles[j]), kCtx.tolerance());
  const Real g("0.8");
  EXPECT_LT(abs(evaluate_real(sc, g / lam, kCtx) - evaluate_real(ap, g, kCtx)), kCtx.tolerance());
}

TEST(Properties, RealSeriesGiveRealValues) {
  ScopedPrecision p(kCtx);
  const auto ap = build(quartic(6), kQuartic, 3, kCtx);
  ASSERT_TRUE(ap.warnings.empty());
  for (const char* gs : {"0.05", "1", "20"}) {
    const BigComplex v = evaluate(ap, BigComplex(Real(gs)), kCtx);
    EXPECT_LT(abs(v.im), kCtx.tolerance() * abs(v.re)) << gs;
  }
}

TEST(Properties, EulerHeisenbergPolesConverge) {
  ScopedPrecision p(kCtx);
  const Real pi2 = pi() * pi();
  Real previous = 1;
  for (int n = 1; n <= 5; ++n) {
    const auto ap = build(euler_heisenberg_series(2 * n), kEh, n, kCtx);
    std::size_t nearest = 0;
    for (std::size_t j = 1; j < ap.pf.poles.size(); ++j)
      if (abs(ap.pf.poles[j]) < abs(ap.pf.poles[nearest])) nearest = j;
    const Real error = abs(ap.pf.poles[nearest] + BigComplex(pi2)) / pi2;
    EXPECT_LT(error, previous) << n;
    previous = error;
    if (n == 4) {
      EXPECT_LT(error, Real("1e-6"));
      const BigComplex expected(-2 / pi2);
      EXPECT_LT(abs(ap.pf.residues[nearest] - expected) / abs(expected), Real("1e-4"));
    }
  }
}

TEST(Properties, BorelPadeMatchesLaplaceQuadrature) {
  // 1/2 + g int_0^inf e^-t B(g t) dt with B the Pade of the Borel transform
  ScopedPrecision p(kCtx);
  const auto ap = build(quartic(8), kBorel, 4, kCtx);
  ASSERT_TRUE(ap.warnings.empty());
  for (const char* gs : {"0.1", "1"}) {
    const Real g(gs);
    const Real integral = ref::laplace([&](const Real& t) {
      BigComplex sum(0);
      for (std::size_t j = 0; j < ap.pf.poles.size(); ++j)
        sum += ap.pf.residues[j] / (BigComplex(g * t) - ap.pf.poles[j]);
      return Real(exp(-t) * sum.re);
    });
    const Real expected = Real("0.5") + g * integral;
    EXPECT_LT(abs(evaluate_real(ap, g, kCtx) - expected), ref::tol_digits(20)) << gs;
  }
}
