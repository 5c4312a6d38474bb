// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>

#include "algebra/roots.hpp"
#include "curve/curve.hpp"

namespace twomat::curve {

namespace {

// Refines a numeric preimage w0 into the solution of x(w) = X for series-valued X.
Scalar lift_preimage(const SpectralCurve& c, cx w0, const Scalar& X) {
  if (X.is_number()) return Scalar(w0);
  int depth = 1;
  for (int n = 2; n < X.top() + 2; n *= 2) ++depth;
  Scalar w(w0);
  for (int it = 0; it < depth + 2; ++it) w = w - (c.x()(w) - X) / c.dx()(w);
  return w;
}

bool lex_less(cx p, cx q) { return p.real() != q.real() ? p.real() < q.real() : p.imag() < q.imag(); }

// Keeps only exponents >= 0 and pins the constant term to `value`.
Scalar pin_power_series(const Scalar& s, cx value) {
  const auto& ls = s.series();
  std::vector<Scalar> c;
  for (int e = 0; e <= ls.top(); ++e) c.push_back(ls.at(e));
  c[0] = Scalar(value);
  return Scalar::from_series(s.level(), algebra::LaurentSeries(ls.base, 0, std::move(c)));
}

Scalar zero_constant_term(const Scalar& s) {
  const auto& ls = s.series();
  std::vector<Scalar> c;
  for (int e = 0; e <= ls.top(); ++e) c.push_back(ls.at(e));
  c[0] = Scalar();
  return Scalar::from_series(s.level(), algebra::LaurentSeries(ls.base, 0, std::move(c)));
}

}  // namespace

std::vector<Scalar> sheets_global(const SpectralCurve& c, const Scalar& z0) {
  const cx z = z0.constant_number();
  if (const int s = c.near_branch_point(z); s >= 0)
    fail(ErrorCode::NearBranchPoint, "point too close to branch point " + std::to_string(s));
  const cx X = c.x()(z);
  std::vector<cx> fiber;
  for (const auto& r : algebra::poly_roots(c.x().num() - X * c.x().den()))
    for (int m = 0; m < r.multiplicity; ++m) fiber.push_back(r.root);
  if (static_cast<int>(fiber.size()) != c.sheet_count())
    fail(ErrorCode::SheetCountMismatch, "fiber size differs from the sheet count");
  auto self = std::min_element(fiber.begin(), fiber.end(),
                               [&](cx p, cx q) { return std::abs(p - z) < std::abs(q - z); });
  fiber.erase(self);
  for (auto& w : fiber) {
    for (int it = 0; it < 2; ++it) {
      const cx d = c.dx()(w);
      if (d == cx{}) break;
      w -= (c.x()(w) - X) / d;
    }
  }
  std::sort(fiber.begin(), fiber.end(), lex_less);
  std::vector<Scalar> out{z0};
  const Scalar Xs = c.x()(z0);
  for (cx w : fiber) out.push_back(lift_preimage(c, w, Xs));
  return out;
}

SheetSystem sheets_local(const SpectralCurve& c, int branch_index, int order) {
  if (order < 2) fail(ErrorCode::InvalidArgument, "sheet order must be at least 2");
  if (branch_index < 0 || branch_index >= static_cast<int>(c.branch().size()))
    fail(ErrorCode::InvalidArgument, "branch index out of range");
  const BranchPoint& b = c.branch()[branch_index];
  const cx a = b.a;
  SheetSystem sys;
  sys.branch_index = branch_index;
  sys.center = b;
  sys.order = order;

  const Scalar w0 = Scalar::variable(1, Scalar(a), order, a);
  const algebra::BivariateEvaluator F = [&](const Scalar& w, const Scalar& tt) {
    const Scalar Xt = c.x()(Scalar(a) + tt);
    return algebra::NewtonValue{c.x()(w) - Xt, c.dx()(w)};
  };

  // Conjugate sheet seeded by w = a - t + c2 t^2 with c2 = -x3/x2.
  const Scalar xa = c.x()(Scalar::variable(1, Scalar(a), 4, a));
  const cx x2 = xa.coeff(2).number();
  const cx x3 = xa.coeff(3).number();
  if (x2 == cx{}) fail(ErrorCode::NonSimpleBranchPoint, "vanishing second derivative at a branch point");
  const cx c2 = -x3 / x2;
  const Scalar seed = Scalar::from_series(1, algebra::LaurentSeries(a, 0, {Scalar(a), Scalar(-1.0), Scalar(c2)}));
  // x' vanishes at a on the ramified pair; keep that zero exact so Newton sees valuation one.
  const algebra::BivariateEvaluator Fc = [&](const Scalar& w, const Scalar& tt) {
    algebra::NewtonValue v = F(w, tt);
    if (!v.fw.is_number()) v.fw = zero_constant_term(v.fw);
    return v;
  };
  Scalar w1 = algebra::newton_series_solve(Fc, seed, order, a);
  w1 = pin_power_series(w1, a);

  sys.sheets = {w0, w1};
  for (cx s : b.regular_sheet_seeds) {
    Scalar w = algebra::newton_series_solve(F, Scalar(s), order, a);
    sys.sheets.push_back(pin_power_series(w, w.coeff(0).number()));
  }
  for (size_t j = 0; j < sys.sheets.size(); ++j) {
    Scalar xp = c.dx()(sys.sheets[j]);
    if (j < 2) xp = zero_constant_term(xp);
    sys.xprime.push_back(xp);
    sys.yval.push_back(c.y()(sys.sheets[j]));
  }
  return sys;
}

}  // namespace twomat::curve
