// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>

#include "correlators/engine.hpp"
#include "effective/effective.hpp"
#include "effective/partitions.hpp"
#include "helpers.hpp"

using namespace twomat;
using namespace twomat::effective;
using testing::cx;
using testing::rel;

TEST_CASE("canonical and ordered vertex sums are consistent") {
  for (int d2 = 1; d2 <= 3; ++d2)
    for (int n = 0; n <= 3; ++n)
      for (int g = 0; g <= 2; ++g) {
        const auto canon = canonical_terms(d2, n, g);
        double weighted = 0.0;
        for (const auto& t : canon) {
          CHECK(is_canonical(t));
          weighted += omega_factor(t, TermShape::Effective);
          int sheets = 0, genus = 0;
          for (const auto& b : t.blocks) {
            sheets += static_cast<int>(b.sheets.size());
            genus += b.genus + static_cast<int>(b.sheets.size()) - 1;
          }
          CHECK(sheets <= d2);
          CHECK(genus == g);
        }
        CHECK(weighted == static_cast<double>(ordered_terms(d2, n, g).size()));
      }
}

TEST_CASE("small vertex sums by hand") {
  // One label on d2 = 2: the label sits alone on sheet 1 or on sheet 2.
  CHECK(canonical_terms(2, 1, 0).size() == 2);
  // Genus one without labels on d2 = 1: only W_1^(1) on the single sheet.
  const auto g1 = canonical_terms(1, 0, 1);
  REQUIRE(g1.size() == 1);
  CHECK(g1[0].blocks[0].genus == 1);
  CHECK_THROWS_AS(canonical_terms(3, 3, 1, 2), Error);
}

TEST_CASE("effective recursion equals the cubic one on the hyperelliptic fixture") {
  const auto A = testing::load("fixture_a.json");
  correlators::CubicEngine cubic(A);
  EffectiveEngine eff(A);
  for (auto [n, h] : std::vector<std::pair<int, int>>{{3, 0}, {4, 0}, {1, 1}, {2, 1}, {1, 2}}) {
    const auto p = testing::first(n);
    CHECK(rel(eff.W(h, p).value, cubic.W(h, p).value) < 1e-10);
  }
}

TEST_CASE("effective correlators are symmetric on the three-sheeted fixture") {
  const auto B = testing::load("fixture_b.json");
  EffectiveEngine eff(B);
  auto p = testing::first(5);
  const cx ref = eff.W(0, p).value;
  std::swap(p[0], p[3]);
  CHECK(rel(eff.W(0, p).value, ref) < 1e-9);
  std::swap(p[1], p[4]);
  CHECK(rel(eff.W(0, p).value, ref) < 1e-9);
  auto q = testing::first(3);
  const cx r1 = eff.W(1, q).value;
  std::swap(q[0], q[2]);
  CHECK(rel(eff.W(1, q).value, r1) < 1e-9);
}
