#pragma once

#include <vector>

#include "phipade/big_complex.hpp"
#include "phipade/big_value.hpp"

namespace phipade {

// Dense polynomial with ascending coefficients. The constructor trims
// trailing zeros, so degree() is exact; the zero polynomial has degree -1.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigValue> coeffs);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_exact() const;
  const std::vector<BigValue>& coeffs() const noexcept { return coeffs_; }
  const BigValue& operator[](std::size_t k) const { return coeffs_.at(k); }
  BigValue coeff(std::size_t k) const;

  Polynomial derivative() const;
  BigValue operator()(const BigValue& x) const;
  BigComplex operator()(const BigComplex& z) const;
  // sum |c_k| |z|^k, the scale against which |p(z)| is judged.
  Real magnitude_at(const BigComplex& z) const;

  // Quotient and remainder of *this / divisor.
  std::pair<Polynomial, Polynomial> divide(const Polynomial& divisor) const;

private:
  std::vector<BigValue> coeffs_;
};

} // namespace phipade
