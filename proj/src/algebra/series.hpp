// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "common/error.hpp"

namespace twomat::algebra {

using cx = std::complex<double>;

class LaurentSeries;

// A tower scalar: a complex number (level 0) or a truncated Laurent series in the
// variable of its level whose coefficients are scalars of strictly lower level.
// Values are immutable and cheap to copy.
class Scalar {
 public:
  Scalar() = default;
  Scalar(cx v) : value_(v) {}                        // NOLINT(google-explicit-constructor)
  Scalar(double v) : value_(v) {}                    // NOLINT(google-explicit-constructor)

  static Scalar from_series(int level, LaurentSeries s);
  // center + u where u is the variable of `level`, known through exponent `top`.
  static Scalar variable(int level, const Scalar& center, int top, cx base = {});

  int level() const noexcept { return level_; }
  bool is_number() const noexcept { return level_ == 0; }
  cx number() const;
  const LaurentSeries& series() const;

  bool is_exact_zero() const noexcept { return level_ == 0 && value_ == cx{}; }
  // True when every known coefficient, recursively, is exactly zero.
  bool vanishes() const;
  // Largest modulus of any level-0 entry.
  double max_abs() const;
  // Level-0 value obtained by reading the constant term at every level.
  cx constant_number() const;

  // Coefficient of u^e at the top level. Throws WindowMiss outside the window.
  Scalar coeff(int e) const;
  // Coefficient of u_level^e; scalars of lower level are constants in that variable.
  Scalar coeff_at(int level, int e) const;
  Scalar residue() const { return coeff(-1); }

  Scalar inverse() const;
  Scalar pow(int n) const;
  // Derivative d/du in the top-level variable.
  Scalar derivative() const;
  // Highest valid exponent at top level (large for numbers).
  int top() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

 private:
  int level_ = 0;
  cx value_{};
  std::shared_ptr<const LaurentSeries> s_;
};

// Truncated Laurent series: coefficients for exponents lowest .. lowest+size-1 are
// known; everything beyond is unknown.
class LaurentSeries {
 public:
  cx base{};
  int lowest = 0;
  std::vector<Scalar> coeffs;

  LaurentSeries() = default;
  LaurentSeries(cx base_, int lowest_, std::vector<Scalar> c)
      : base(base_), lowest(lowest_), coeffs(std::move(c)) {}

  int order() const noexcept { return static_cast<int>(coeffs.size()); }
  int top() const noexcept { return lowest + order() - 1; }
  bool known(int e) const noexcept { return e >= lowest && e <= top(); }
  // Coefficient of t^e; exponents below `lowest` are exactly zero.
  Scalar at(int e) const;
};

enum class SeriesOp { Add, Sub, Mul, Div, Compose };

// Binary series operation on series of the same level.
LaurentSeries series_arith(const LaurentSeries& a, const LaurentSeries& b, SeriesOp op, int level = 1);

// Substitutes g (positive valuation, same level as f) for the variable of f.
Scalar compose(const Scalar& f, const Scalar& g);

// Coefficient of exponent -1 at the top level.
Scalar residue(const Scalar& s);

// (1/2 pi i) times the trapezoidal contour integral of f around a circle.
cx residue_quadrature(const std::function<cx(cx)>& f, cx center, double radius, int n);

struct NewtonValue {
  Scalar f;
  Scalar fw;
};
using BivariateEvaluator = std::function<NewtonValue(const Scalar& w, const Scalar& t)>;

// Solves F(w(t), t) = 0 for a power series w with w(0) = w0, through exponent `order`.
// A series-valued seed is refined in place (ramified branches need the two-term ansatz).
Scalar newton_series_solve(const BivariateEvaluator& F, const Scalar& seed, int order, cx base = {},
                           double tol = 1e-10);

}  // namespace twomat::algebra
