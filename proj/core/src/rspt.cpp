#include "phipade/errors.hpp"
#include "phipade/series.hpp"

namespace phipade {

// Ground state written as psi = exp(-x^2/2) * sum_k g^k P_k(x) with P_0 = 1
// and P_k(0) = 0 for k >= 1. Substituting into the Schroedinger equation
// gives, order by order,
//
//   L P_k = sum_{i=1}^{k} E_i P_{k-i} - x^(2M) P_{k-1},
//   L = -1/2 d^2/dx^2 + x d/dx,
//
// with L x^(2n) = 2n x^(2n) - n(2n-1) x^(2n-2). Even polynomials are stored by
// coefficient of x^(2n). The x^(2n), n >= 1 equations are solved top-down; the
// constant equation then fixes E_k.
std::vector<Rational> anharmonic_rspt(unsigned half_power, std::size_t count) {
  if (count < 1) throw InvalidArgument("need at least one coefficient");
  if (half_power < 2) throw InvalidArgument("perturbation power must be >= 4");

  using Poly = std::vector<Rational>;
  std::vector<Poly> p;
  std::vector<Rational> energy;
  p.push_back(Poly{Rational(1)});
  energy.emplace_back(1, 2);

  for (std::size_t k = 1; k < count; ++k) {
    const std::size_t degree = half_power * k; // in units of x^2
    Poly rhs(degree + 1, Rational(0));
    for (std::size_t i = 1; i < k; ++i) {
      const Poly& q = p[k - i];
      for (std::size_t n = 0; n < q.size(); ++n) rhs[n] += energy[i] * q[n];
    }
    const Poly& prev = p[k - 1];
    for (std::size_t n = 0; n < prev.size(); ++n) rhs[n + half_power] -= prev[n];

    Poly next(degree + 1, Rational(0));
    Rational above = 0;
    for (std::size_t n = degree; n >= 1; --n) {
      const Rational nn(static_cast<long long>(n));
      Rational c = rhs[n];
      if (n < degree) c += Rational(static_cast<long long>((n + 1) * (2 * n + 1))) * above;
      c /= 2 * nn;
      next[n] = c;
      above = std::move(c);
    }
    // Constant term: -c_1 = E_k + rhs_0 (rhs_0 excludes E_k).
    energy.push_back(-next[1] - rhs[0]);
    p.push_back(std::move(next));
  }
  return energy;
}

} // namespace phipade
