// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "algebra/polynomial.hpp"
#include "algebra/roots.hpp"
#include "algebra/series.hpp"
#include "algebra/tensor.hpp"

using namespace twomat;
using namespace twomat::algebra;

namespace {

Scalar u(int top) { return Scalar::variable(1, Scalar(0.0), top); }

}  // namespace

TEST_CASE("polynomial evaluation, derivative and construction from roots") {
  const Polynomial p = Polynomial::from_roots({1.0, cx(0, 2)}, 3.0);
  CHECK(std::abs(p(cx(1.0))) < 1e-15);
  CHECK(std::abs(p(cx(0, 2))) < 1e-15);
  CHECK(p.degree() == 2);
  CHECK(std::abs(p.leading() - 3.0) < 1e-15);
  const Polynomial d = p.derivative();
  CHECK(std::abs(d(cx(0.0)) - p.coeff(1)) < 1e-15);
  CHECK(Polynomial({0.0, 0.0}).is_zero());
}

TEST_CASE("rational function derivative matches finite differences") {
  const RationalFunction r(Polynomial({1.0, 0.0, 1.0}), Polynomial({0.0, 1.0}));
  const cx z(0.7, 0.2), h = 1e-6;
  const cx fd = (r(z + h) - r(z - h)) / (2.0 * h);
  CHECK(std::abs(r.derivative()(z) - fd) < 1e-8);
}

TEST_CASE("roots with multiplicities") {
  const Polynomial p = Polynomial::from_roots({2.0, 2.0, -1.0, cx(0.5, 1.0)});
  auto roots = poly_roots(p);
  REQUIRE(roots.size() == 3);
  int total = 0;
  for (const auto& r : roots) {
    total += r.multiplicity;
    if (std::abs(r.root - 2.0) < 1e-6) CHECK(r.multiplicity == 2);
  }
  CHECK(total == 4);
  CHECK_THROWS_AS(poly_roots(Polynomial()), Error);
}

TEST_CASE("series arithmetic: geometric inverse and square root by Newton") {
  const Scalar t = u(10);
  const Scalar inv = (Scalar(1.0) + t).inverse();
  for (int e = 0; e <= 8; ++e) CHECK(std::abs(inv.coeff(e).number() - std::pow(-1.0, e)) < 1e-14);

  const BivariateEvaluator F = [](const Scalar& w, const Scalar& s) {
    return NewtonValue{w * w - (Scalar(1.0) + s), Scalar(2.0) * w};
  };
  const Scalar w = newton_series_solve(F, Scalar(1.0), 6);
  CHECK(std::abs(w.coeff(0).number() - 1.0) < 1e-12);
  CHECK(std::abs(w.coeff(1).number() - 0.5) < 1e-12);
  CHECK(std::abs(w.coeff(2).number() + 0.125) < 1e-12);
  CHECK(std::abs(w.coeff(3).number() - 0.0625) < 1e-12);
}

TEST_CASE("composition and residues") {
  const Scalar t = u(12);
  const Scalar f = (Scalar(1.0) - t).inverse();
  const Scalar g = compose(f, t * t);
  CHECK(std::abs(g.coeff(2).number() - 1.0) < 1e-14);
  CHECK(std::abs(g.coeff(3).number()) < 1e-14);
  const Scalar pole = (t * t).inverse() * (Scalar(2.0) + Scalar(3.0) * t);
  CHECK(std::abs(residue(pole).number() - 3.0) < 1e-14);
  CHECK_THROWS_AS(t.coeff(40), Error);
}

TEST_CASE("trapezoidal residues agree with the exact value") {
  const cx r = residue_quadrature([](cx z) { return std::exp(z) / ((z - 1.0) * (z - 1.0)); }, 1.0, 0.5, 128);
  CHECK(std::abs(r - std::exp(1.0)) < 1e-12);
}

TEST_CASE("tensor outer product, contraction and relabeling") {
  Tensor a({1}, {2}), b({3}, {2});
  a[0] = 1.0;
  a[1] = 2.0;
  b[0] = 3.0;
  b[1] = 4.0;
  const Tensor ab = a.outer(b);
  CHECK(ab.rank() == 2);
  CHECK(std::abs(ab[1 * 2 + 0].number() - 6.0) < 1e-15);
  const Tensor c = ab.contract(3, {Scalar(1.0), Scalar(1.0)});
  CHECK(c.rank() == 1);
  CHECK(std::abs(c[1].number() - 14.0) < 1e-15);
  const Tensor r = c.relabeled({7});
  CHECK(r.labels() == std::vector<int>{7});
  CHECK(Tensor().is_zero());
}
