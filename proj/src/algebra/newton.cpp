// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>

#include "algebra/series.hpp"

namespace twomat::algebra {

namespace {

// Treats a finite seed as an exact polynomial and widens its window to `top`.
Scalar widen(const Scalar& seed, int top, cx base) {
  std::vector<Scalar> c(static_cast<size_t>(top + 1));
  if (seed.is_number()) {
    c[0] = seed;
  } else {
    const LaurentSeries& s = seed.series();
    if (s.lowest < 0) fail(ErrorCode::InvalidArgument, "Newton seed must be a power series");
    for (int e = s.lowest; e <= std::min(s.top(), top); ++e) c[e] = s.coeffs[e - s.lowest];
  }
  return Scalar::from_series(1, LaurentSeries(base, 0, std::move(c)));
}

// Drops negative exponents produced by rounding noise in the division.
Scalar power_part(const Scalar& s) {
  if (s.is_number()) return s;
  const LaurentSeries& ls = s.series();
  if (ls.lowest >= 0) return s;
  std::vector<Scalar> c;
  for (int e = 0; e <= ls.top(); ++e) c.push_back(ls.at(e));
  return Scalar::from_series(s.level(), LaurentSeries(ls.base, 0, std::move(c)));
}

Scalar truncate(const Scalar& s, int top) {
  if (s.is_number()) return s;
  const LaurentSeries& ls = s.series();
  if (ls.top() <= top) return s;
  std::vector<Scalar> c(ls.coeffs.begin(), ls.coeffs.begin() + (top - ls.lowest + 1));
  return Scalar::from_series(s.level(), LaurentSeries(ls.base, ls.lowest, std::move(c)));
}

}  // namespace

Scalar newton_series_solve(const BivariateEvaluator& F, const Scalar& seed, int order, cx base, double tol) {
  if (order < 1) fail(ErrorCode::InvalidArgument, "Newton order must be positive");
  const bool ramified = !seed.is_number();
  const int iterations = static_cast<int>(std::ceil(std::log2(order + 1.0))) + 3;
  // Each ramified step loses two exponents of validity (division by a valuation-one x').
  const int pad = ramified ? 2 * iterations + 2 : 1;
  const int top = order + pad;

  const Scalar t = Scalar::variable(1, Scalar(0.0), top, base);
  Scalar w = widen(seed, top, base);

  if (!ramified) {
    const NewtonValue v0 = F(seed, Scalar(0.0));
    const double scale = 1.0 + std::abs(seed.number());
    if (std::abs(v0.fw.number()) <= 1e-12 * scale)
      fail(ErrorCode::SingularJacobian, "singular Jacobian at the seed; a ramified ansatz is required");
  }

  for (int it = 0; it < iterations; ++it) {
    const NewtonValue v = F(w, t);
    if (v.f.vanishes()) break;
    w = power_part(w - v.f / v.fw);
  }
  w = truncate(w, order);

  const NewtonValue check = F(w, t);
  const double scale = 1.0 + w.max_abs();
  if (!check.f.is_number()) {
    const LaurentSeries& r = check.f.series();
    if (r.top() < order) fail(ErrorCode::ResidualTooLarge, "Newton window collapsed below the requested order");
    for (int e = r.lowest; e <= order; ++e)
      if (r.at(e).max_abs() > tol * scale)
        fail(ErrorCode::ResidualTooLarge, "Newton residual too large at exponent " + std::to_string(e));
  } else if (std::abs(check.f.number()) > tol * scale) {
    fail(ErrorCode::ResidualTooLarge, "Newton residual too large");
  }
  return w;
}

}  // namespace twomat::algebra
