// SPDX-License-Identifier: Apache-2.0
#include "algebra/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "algebra/roots.hpp"

namespace twomat::algebra {

Polynomial::Polynomial(std::vector<cx> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(int degree, cx c) {
  std::vector<cx> v(static_cast<size_t>(degree + 1));
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == cx{}) c_.pop_back();
}

double Polynomial::norm() const {
  double m = 0.0;
  for (const auto& c : c_) m = std::max(m, std::abs(c));
  return m;
}

cx Polynomial::operator()(cx z) const {
  cx r{};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * z + *it;
  return r;
}

Scalar Polynomial::operator()(const Scalar& z) const {
  if (z.is_number()) return Scalar((*this)(z.number()));
  if (c_.empty()) return Scalar();
  Scalar r(c_.back());
  for (int i = degree() - 1; i >= 0; --i) r = r * z + Scalar(c_[i]);
  return r;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<cx> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * double(i);
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<cx> r(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(int(i)) + b.coeff(int(i));
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + cx(-1.0) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<cx> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(r));
}

Polynomial operator*(cx s, const Polynomial& a) {
  std::vector<cx> r = a.c_;
  for (auto& c : r) c *= s;
  return Polynomial(std::move(r));
}

Polynomial Polynomial::from_roots(const std::vector<cx>& roots, cx lead) {
  Polynomial p = constant(lead);
  for (const auto& r : roots) p = p * Polynomial({-r, 1.0});
  return p;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorCode::InvalidArgument, "zero denominator");
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::reduced(double tol) const {
  if (num_.degree() < 1 || den_.degree() < 1) return *this;
  auto expand = [](const std::vector<RootInfo>& rs) {
    std::vector<cx> out;
    for (const auto& r : rs)
      for (int m = 0; m < r.multiplicity; ++m) out.push_back(r.root);
    return out;
  };
  std::vector<cx> nr = expand(poly_roots(num_));
  std::vector<cx> dr = expand(poly_roots(den_));
  bool changed = false;
  for (auto it = nr.begin(); it != nr.end();) {
    auto match = std::find_if(dr.begin(), dr.end(),
                              [&](cx d) { return std::abs(d - *it) <= tol * (1.0 + std::abs(d)); });
    if (match != dr.end()) {
      dr.erase(match);
      it = nr.erase(it);
      changed = true;
    } else {
      ++it;
    }
  }
  if (!changed) return *this;
  return RationalFunction(Polynomial::from_roots(nr, num_.leading()), Polynomial::from_roots(dr, den_.leading()));
}

}  // namespace twomat::algebra
