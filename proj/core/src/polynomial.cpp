#include "phipade/polynomial.hpp"

#include "phipade/errors.hpp"

namespace phipade {

Polynomial::Polynomial(std::vector<BigValue> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool Polynomial::is_exact() const {
  for (const auto& c : coeffs_) {
    if (!c.is_exact()) return false;
  }
  return true;
}

BigValue Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigValue(0);
}

Polynomial Polynomial::derivative() const {
  std::vector<BigValue> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d.push_back(coeffs_[k] * BigValue(static_cast<long long>(k)));
  }
  return Polynomial(std::move(d));
}

BigValue Polynomial::operator()(const BigValue& x) const {
  BigValue acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigComplex Polynomial::operator()(const BigComplex& z) const {
  BigComplex acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= z;
    acc.re += it->to_real();
  }
  return acc;
}

Real Polynomial::magnitude_at(const BigComplex& z) const {
  Real r = abs(z);
  Real acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * r + it->abs().to_real();
  }
  return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divide(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (degree() < divisor.degree()) return {Polynomial(), *this};
  std::vector<BigValue> rem = coeffs_;
  const int dd = divisor.degree();
  std::vector<BigValue> quot(static_cast<std::size_t>(degree() - dd + 1), BigValue(0));
  const BigValue& lead = divisor.coeffs_.back();
  for (int k = degree() - dd; k >= 0; --k) {
    BigValue factor = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = factor;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= factor * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

} // namespace phipade
