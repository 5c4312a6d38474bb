// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

#include "algebra/series.hpp"

namespace twomat::algebra {

// Dense polynomial with complex coefficients in ascending degree order.
// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<cx> coeffs);

  static Polynomial constant(cx c) { return Polynomial({c}); }
  static Polynomial monomial(int degree, cx c = 1.0);

  const std::vector<cx>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  cx leading() const { return c_.empty() ? cx{} : c_.back(); }
  cx coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : cx{}; }
  double norm() const;

  cx operator()(cx z) const;
  Scalar operator()(const Scalar& z) const;

  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(cx s, const Polynomial& a);

  // Polynomial with the given roots (with repetition) and leading coefficient.
  static Polynomial from_roots(const std::vector<cx>& roots, cx lead = 1.0);

 private:
  void trim();
  std::vector<cx> c_;
};

// Quotient of polynomials. The denominator is never the zero polynomial.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::constant(1.0)) {}
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }

  cx operator()(cx z) const { return num_(z) / den_(z); }
  Scalar operator()(const Scalar& z) const { return num_(z) / den_(z); }

  RationalFunction derivative() const;

  // Cancels common roots of numerator and denominator that agree within tol.
  RationalFunction reduced(double tol = 1e-8) const;

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace twomat::algebra
