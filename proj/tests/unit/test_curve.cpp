// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "common/error.hpp"
#include "helpers.hpp"

using namespace twomat;
using namespace twomat::curve;
using testing::cx;

TEST_CASE("fixture curves load with the expected sheet structure") {
  const auto A = testing::load("fixture_a.json");
  const auto B = testing::load("fixture_b.json");
  CHECK(A.d2() == 1);
  CHECK(B.d2() == 2);
  CHECK(A.sheet_count() == 2);
  CHECK(B.sheet_count() == 3);
  for (const auto* c : {&A, &B}) {
    REQUIRE(c->branch().size() == 2);
    for (const auto& b : c->branch()) CHECK(std::abs(std::abs(b.a.real()) - 1.0) < 1e-12);
  }
  CHECK(testing::load("square.json").d2() == 1);
}

TEST_CASE("malformed and non-simple curve specs are rejected") {
  try {
    testing::load("malformed.json");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
  try {
    testing::load("nonsimple.json");
    FAIL("expected NonSimpleBranchPoint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonSimpleBranchPoint);
  }
  CHECK_THROWS_AS(load_curve_json(R"({"x_num":[0,0]})"), Error);
}

TEST_CASE("curve specs round-trip through the serializer") {
  const auto spec = parse_curve_spec(testing::read_fixture("fixture_a.json"));
  const auto again = parse_curve_spec(curve_spec_to_json(spec));
  CHECK(again.x.num().coeffs() == spec.x.num().coeffs());
  CHECK(again.y.den().coeffs() == spec.y.den().coeffs());
  CHECK(again.label == spec.label);
}

TEST_CASE("global sheets share x and are distinct") {
  const auto B = testing::load("fixture_b.json");
  const cx z(0.7, 1.3);
  const auto s = sheets_global(B, Scalar(z));
  REQUIRE(s.size() == 3);
  CHECK(std::abs(s[0].number() - z) < 1e-14);
  for (const auto& w : s) CHECK(std::abs(B.x()(w.number()) - B.x()(z)) < 1e-11);
  CHECK(std::abs(s[1].number() - s[2].number()) > 1e-3);
}

TEST_CASE("local sheets agree in x as series") {
  const auto B = testing::load("fixture_b.json");
  const auto S = sheets_local(B, 0, 10);
  const Scalar x0 = B.x()(S.sheets[0]);
  for (const auto& w : S.sheets) {
    const Scalar xw = B.x()(w);
    for (int e = 0; e <= 6; ++e) CHECK(std::abs((xw.coeff(e) - x0.coeff(e)).constant_number()) < 1e-10);
  }
  // The conjugate sheet meets the physical one at the branch point.
  CHECK(std::abs(S.sheets[1].coeff(0).number() - S.center.a) < 1e-14);
}

TEST_CASE("Bergmann kernel and third-kind differential in the reduced convention") {
  const auto A = testing::load("fixture_a.json");
  const cx p(0.4, 2.0), q(-1.5, 0.3), o(0.3183, 0.5773);
  CHECK(testing::rel(bergmann(A, Scalar(p), Scalar(q)).number(), 1.0 / ((p - q) * (p - q))) < 1e-14);
  CHECK(testing::rel(third_kind(A, Scalar(p), Scalar(q), o).number(), 1.0 / (p - q) - 1.0 / (p - o)) < 1e-14);
}

TEST_CASE("near-branch-point guard") {
  const auto A = testing::load("fixture_a.json");
  CHECK(A.near_branch_point(1.0) >= 0);
  CHECK(A.near_branch_point(cx(0.2, 2.0)) == -1);
}
