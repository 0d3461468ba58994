#include "phipade/series.hpp"

#include "phipade/errors.hpp"
#include "phipade/special.hpp"

namespace phipade {

bool TransformSpec::is_identity() const {
  return subtract.is_zero() && divide_power == 0 && scale == BigValue(1) &&
         power == 1;
}

void TransformSpec::validate() const {
  if (power < 1) throw InvalidArgument("variable power must be >= 1");
  if (scale.is_zero()) throw InvalidArgument("variable scale must be nonzero");
  if (divide_power < 0) throw InvalidArgument("divide_power must be >= 0");
}

bool PowerSeries::is_exact() const {
  for (const auto& c : coeffs) {
    if (!c.is_exact()) return false;
  }
  return true;
}

PowerSeries PowerSeries::prefix(std::size_t count) const {
  if (count > coeffs.size()) {
    throw InvalidArgument("series '" + label + "' has " +
                          std::to_string(coeffs.size()) +
                          " coefficients, need " + std::to_string(count));
  }
  PowerSeries out{{coeffs.begin(), coeffs.begin() + static_cast<long>(count)},
                  transform, label};
  return out;
}

void PowerSeries::validate() const {
  if (coeffs.empty()) throw InvalidArgument("series has no coefficients");
  transform.validate();
}

std::vector<Rational> bernoulli_table(unsigned count) {
  std::vector<Rational> b;
  b.reserve(count);
  for (unsigned n = 0; n < count; ++n) {
    if (n == 0) {
      b.emplace_back(1);
      continue;
    }
    if (n > 1 && n % 2 == 1) {
      b.emplace_back(0);
      continue;
    }
    // sum_{j<=n} C(n+1, j) B_j = 0
    Rational acc = 0;
    for (unsigned j = 0; j < n; ++j) {
      if (b[j] != 0) acc += Rational(binomial(n + 1, j)) * b[j];
    }
    b.emplace_back(-acc / Rational(n + 1));
  }
  return b;
}

Rational bernoulli(unsigned n) { return bernoulli_table(n + 1).back(); }

PowerSeries euler_heisenberg_series(std::size_t count) {
  if (count < 1) throw InvalidArgument("need at least one coefficient");
  // From coth s - 1/s - s/3 = sum_{n>=2} 2^(2n) B_(2n) s^(2n-1) / (2n)! and
  // the Laplace integral of s^(2n-3): the g^(2k+2) coefficient is
  // 2^(2k+4) B_(2k+4) / ((2k+4)(2k+3)(2k+2)).
  auto b = bernoulli_table(static_cast<unsigned>(2 * count + 4));
  PowerSeries out;
  out.label = "euler-heisenberg";
  out.transform.divide_power = 2;
  out.transform.power = 2;
  for (std::size_t k = 0; k < count; ++k) {
    unsigned n = static_cast<unsigned>(2 * k + 4);
    Rational c = b[n] * Rational(Integer(1) << n);
    c /= Rational(static_cast<long long>(n) * (n - 1) * (n - 2));
    out.coeffs.emplace_back(c);
  }
  return out;
}

PowerSeries zero_dim_partition_series(std::size_t count) {
  if (count < 1) throw InvalidArgument("need at least one coefficient");
  PowerSeries out;
  out.label = "zero-dim";
  const Rational a(3, 4), b(1, 4), ratio(-2, 3);
  Rational term = 1;
  for (std::size_t k = 0; k < count; ++k) {
    out.coeffs.emplace_back(term);
    // (a)_{k+1}(b)_{k+1}/(k+1)! over (a)_k(b)_k/k!
    Rational step = (a + k) * (b + k) / Rational(static_cast<long long>(k + 1));
    term *= step * ratio;
  }
  return out;
}

PowerSeries quartic_rspt_series(std::size_t count) {
  PowerSeries out;
  out.label = "quartic";
  for (auto& e : anharmonic_rspt(2, count)) out.coeffs.emplace_back(std::move(e));
  return out;
}

PowerSeries sextic_rspt_series(std::size_t count) {
  PowerSeries out;
  out.label = "sextic";
  for (auto& e : anharmonic_rspt(3, count)) out.coeffs.emplace_back(std::move(e));
  return out;
}

PowerSeries beta_function_series() {
  PowerSeries out;
  out.label = "beta";
  out.coeffs = {
      BigValue(0),
      BigValue(-1),
      BigValue(1),
      BigValue::ratio(-308, 729),
      BigValue::exact_decimal("0.3510695977"),
      BigValue::exact_decimal("-0.3765268283"),
      BigValue::exact_decimal("0.49554751"),
      BigValue::exact_decimal("-0.749689"),
  };
  return out;
}

PowerSeries subtract_leading(const PowerSeries& series) {
  if (series.size() < 2) {
    throw InvalidArgument("subtracting the leading term needs >= 2 coefficients");
  }
  PowerSeries out;
  out.label = series.label;
  if (!series.transform.is_identity()) {
    throw InvalidArgument("subtract_leading expects an untransformed series");
  }
  out.transform.subtract = series.coeffs.front();
  out.transform.divide_power = 1;
  out.coeffs.assign(series.coeffs.begin() + 1, series.coeffs.end());
  return out;
}

} // namespace phipade
