// SPDX-License-Identifier: Apache-2.0
#include "curve/curve.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "algebra/roots.hpp"

namespace twomat::curve {

namespace {

int map_degree(const RationalFunction& f) { return std::max(f.num().degree(), f.den().degree()); }

Polynomial fiber_polynomial(const RationalFunction& x, cx value) {
  return x.num() - value * x.den();
}

std::vector<cx> finite_poles(const RationalFunction& f) {
  std::vector<cx> out;
  if (f.den().degree() < 1) return out;
  for (const auto& r : algebra::poly_roots(f.den())) out.push_back(r.root);
  return out;
}

bool has_pole_at_infinity(const RationalFunction& f) { return f.num().degree() > f.den().degree(); }

}  // namespace

SpectralCurve::SpectralCurve(CurveSpec spec, std::vector<BranchPoint> branch, int d1, int d2)
    : spec_(std::move(spec)),
      dx_(spec_.x.derivative()),
      dy_(spec_.y.derivative()),
      branch_(std::move(branch)),
      d1_(d1),
      d2_(d2) {}

int SpectralCurve::near_branch_point(cx z, double tol_factor) const {
  for (size_t s = 0; s < branch_.size(); ++s)
    if (std::abs(z - branch_[s].a) < tol_factor * branch_[s].spacing) return static_cast<int>(s);
  return -1;
}

SpectralCurve load_curve(const CurveSpec& input) {
  CurveSpec spec = input;
  spec.x = spec.x.reduced();
  spec.y = spec.y.reduced();
  const int degx = map_degree(spec.x);
  if (degx < 2) fail(ErrorCode::SheetCountMismatch, "x must have degree at least 2 as a rational map");
  const int d2 = degx - 1;
  const int d1 = std::max(map_degree(spec.y) - 1, 0);

  // Generic fibers must have exactly deg x distinct preimages.
  std::mt19937 rng(7u);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 3; ++trial) {
    const cx target(u(rng), u(rng));
    const auto roots = algebra::poly_roots(fiber_polynomial(spec.x, target));
    const int count = static_cast<int>(roots.size());
    if (count != degx)
      fail(ErrorCode::SheetCountMismatch, "generic fiber has " + std::to_string(count) + " preimages, expected " +
                                              std::to_string(degx));
  }

  const Polynomial crit = spec.x.num().derivative() * spec.x.den() - spec.x.num() * spec.x.den().derivative();
  const std::vector<cx> xpoles = finite_poles(spec.x);
  std::vector<BranchPoint> branch;
  if (crit.degree() >= 1) {
    for (const auto& r : algebra::poly_roots(crit)) {
      const bool is_pole = std::any_of(xpoles.begin(), xpoles.end(), [&](cx p) {
        return std::abs(p - r.root) <= 1e-8 * (1.0 + std::abs(p));
      });
      if (is_pole) continue;
      if (r.multiplicity > 1)
        fail(ErrorCode::NonSimpleBranchPoint,
             "dx has a zero of multiplicity " + std::to_string(r.multiplicity) + " at z = (" +
                 std::to_string(r.root.real()) + ", " + std::to_string(r.root.imag()) + ")");
      BranchPoint b;
      b.a = r.root;
      b.conjugate_seed = r.root;
      std::vector<cx> fiber;
      for (const auto& f : algebra::poly_roots(fiber_polynomial(spec.x, spec.x(r.root))))
        for (int m = 0; m < f.multiplicity; ++m) fiber.push_back(f.root);
      // Drop the colliding pair at a.
      for (int rep = 0; rep < 2 && !fiber.empty(); ++rep) {
        auto it = std::min_element(fiber.begin(), fiber.end(),
                                   [&](cx p, cx q) { return std::abs(p - r.root) < std::abs(q - r.root); });
        fiber.erase(it);
      }
      std::sort(fiber.begin(), fiber.end(), [](cx p, cx q) {
        return p.real() != q.real() ? p.real() < q.real() : p.imag() < q.imag();
      });
      b.regular_sheet_seeds = fiber;
      branch.push_back(b);
    }
  }
  if (branch.empty()) fail(ErrorCode::SheetCountMismatch, "curve has no finite branch points");

  for (auto& b : branch) {
    double d = 1.0;
    for (const auto& o : branch)
      if (&o != &b) d = std::min(d, std::abs(o.a - b.a));
    for (cx s : b.regular_sheet_seeds) d = std::min(d, std::abs(s - b.a));
    for (cx p : xpoles) d = std::min(d, std::abs(p - b.a));
    b.spacing = d;
  }
  return SpectralCurve(std::move(spec), std::move(branch), d1, d2);
}

SpectralCurve load_curve_json(const std::string& text) { return load_curve(parse_curve_spec(text)); }

Scalar bergmann(const SpectralCurve&, const Scalar& z1, const Scalar& z2) {
  const Scalar d = z1 - z2;
  if (d.is_number() && std::abs(d.number()) == 0.0) fail(ErrorCode::CoincidentPoints, "Bergmann kernel on the diagonal");
  return (d * d).inverse();
}

Scalar third_kind(const SpectralCurve&, const Scalar& p, const Scalar& q, cx o) {
  const Scalar pq = p - q;
  const Scalar po = p - Scalar(o);
  if ((pq.is_number() && pq.number() == cx{}) || (po.is_number() && po.number() == cx{}))
    fail(ErrorCode::CoincidentPoints, "third-kind differential at its poles");
  return pq.inverse() - po.inverse();
}

Scalar ey_at(const SpectralCurve& c, const std::vector<Scalar>& yvals, int i) {
  if (i < 0 || i >= static_cast<int>(yvals.size())) fail(ErrorCode::SheetIndexOutOfRange, "sheet index out of range");
  Scalar prod(-c.g_lead());
  for (int j = 0; j < static_cast<int>(yvals.size()); ++j)
    if (j != i) prod = prod * (yvals[i] - yvals[j]);
  return prod;
}

Scalar ey_at(const SpectralCurve& c, const Scalar& z, int i) {
  std::vector<Scalar> ys;
  for (const auto& w : sheets_global(c, z)) ys.push_back(c.y()(w));
  return ey_at(c, ys, i);
}

NormalizationReport validate_resolvent_normalization(SpectralCurve& c) {
  NormalizationReport rep;
  std::vector<cx> sing = finite_poles(c.x());
  for (cx p : finite_poles(c.y())) sing.push_back(p);
  double far = 1.0;
  for (cx s : sing) far = std::max(far, std::abs(s) + 1.0);

  auto residues = [&](const RationalFunction& f, const RationalFunction& g, const RationalFunction& dg) {
    // Residues of f dg at the poles of g.
    std::vector<ResidueAtPole> out;
    auto integrand = [&](cx z) { return f(z) * dg(z); };
    for (cx p : finite_poles(g)) {
      double r = 1.0;
      for (cx s : sing)
        if (std::abs(s - p) > 1e-9) r = std::min(r, 0.25 * std::abs(s - p));
      out.push_back({false, p, algebra::residue_quadrature(integrand, p, r, 256)});
    }
    if (has_pole_at_infinity(g)) {
      const cx res = -algebra::residue_quadrature(integrand, 0.0, 2.0 * far, 512);
      out.push_back({true, {}, res});
    }
    return out;
  };
  rep.y_dx = residues(c.y(), c.x(), c.dx());
  rep.x_dy = residues(c.x(), c.y(), c.dy());
  auto is_one = [](const ResidueAtPole& r) { return std::abs(r.residue - 1.0) < 1e-8; };
  rep.y_dx_ok = std::any_of(rep.y_dx.begin(), rep.y_dx.end(), is_one);
  rep.x_dy_ok = std::any_of(rep.x_dy.begin(), rep.x_dy.end(), is_one);
  rep.normalized = rep.y_dx_ok && rep.x_dy_ok;
  c.set_normalization_flag(rep.normalized);
  return rep;
}

Scalar to_dx_normalized(const SpectralCurve& c, const Scalar& reduced, const std::vector<Scalar>& points) {
  Scalar v = reduced;
  for (const auto& p : points) v = v / c.dx()(p);
  return v;
}

}  // namespace twomat::curve
