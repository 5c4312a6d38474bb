// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "correlators/engine.hpp"
#include "helpers.hpp"
#include "onematrix/gaussian.hpp"
#include "onematrix/onematrix.hpp"

using namespace twomat;
using namespace twomat::onematrix;
using testing::cx;
using testing::rel;

TEST_CASE("involution of the hyperelliptic fixtures") {
  const auto A = testing::load("fixture_a.json");
  CHECK(is_hyperelliptic(A));
  CHECK(is_hyperelliptic(testing::load("square.json")));
  const cx z(0.7, 1.3);
  CHECK(std::abs(involution(A, z) - 1.0 / z) < 1e-12);
  CHECK(std::abs(A.y()(involution(A, z)) + A.y()(z)) < 1e-12);
  try {
    OneMatrixEngine e(testing::load("fixture_b.json"));
    FAIL("expected NotHyperelliptic");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotHyperelliptic);
  }
}

TEST_CASE("one-matrix base cases and symmetry") {
  OneMatrixEngine e(testing::load("gaussian.json"));
  const auto p = testing::first(3);
  CHECK(rel(e.W(0, {p[0], p[1]}).value, 1.0 / ((p[0] - p[1]) * (p[0] - p[1]))) < 1e-14);
  const cx w = e.W(0, p).value;
  CHECK(rel(e.W(0, {p[2], p[0], p[1]}).value, w) < 1e-10);
  CHECK(rel(e.W(0, {p[1], p[0], p[2]}).value, w) < 1e-10);
}

TEST_CASE("one-matrix recursion matches the two-matrix engine in the Gaussian limit") {
  const auto G = testing::load("gaussian.json");
  OneMatrixEngine one(G);
  correlators::CubicEngine two(G);
  for (auto [n, h] : std::vector<std::pair<int, int>>{{3, 0}, {1, 1}, {2, 1}, {1, 2}}) {
    const auto p = testing::first(n);
    CHECK(rel(one.W(h, p).value, two.W(h, p).value) < 1e-9);
  }
}

TEST_CASE("correlators are not symmetric under the involution") {
  const auto A = testing::load("fixture_a.json");
  OneMatrixEngine e(A);
  const cx z1(0.4, 1.7), z2(-1.6, 0.5);
  const cx direct = e.W(0, {z1, z2}).value, flipped = e.W(0, {involution(A, z1), z2}).value;
  CHECK(std::abs(direct - flipped) > 1e-3 * std::abs(direct));
}

TEST_CASE("one-matrix term counts") {
  CHECK(count_terms(1, 0) == 1);
  CHECK(count_terms(2, 0) == 2);
  CHECK(count_terms(3, 0) == 12);
  CHECK(count_terms(0, 1) == 1);
}

TEST_CASE("Gaussian-limit report") {
  const auto rep = gaussian_limit_compare(testing::load("fixture_a.json"), 3, 1, {}, 7, 2, 3);
  CHECK(rep.max_relative < 1e-8);
  CHECK(rep.max_conjugate_residual < 1e-8);
  CHECK(rep.max_symmetric_residual < 1e-8);
  CHECK(rep.colored_diagrams > 0);
  CHECK(rep.colored_max == 0.0);
  for (const auto& r : rep.relation)
    if (!r.symmetric_applies) CHECK(r.symmetric_residual > 1e-3);
}
