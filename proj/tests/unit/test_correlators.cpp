// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>

#include "algebra/series.hpp"
#include "correlators/engine.hpp"
#include "correlators/interp.hpp"
#include "correlators/planar.hpp"
#include "helpers.hpp"

using namespace twomat;
using namespace twomat::correlators;
using testing::cx;
using testing::rel;

namespace {

// sum over branch points of Res B(q, p1) B(q, p2) B(q, p3) / (x'(q) y'(q)), by quadrature.
cx rauch(const curve::SpectralCurve& c, cx p1, cx p2, cx p3) {
  cx total{};
  for (const auto& b : c.branch()) {
    auto f = [&](cx q) {
      return 1.0 / ((q - p1) * (q - p1) * (q - p2) * (q - p2) * (q - p3) * (q - p3) * c.dx()(q) * c.dy()(q));
    };
    total += algebra::residue_quadrature(f, b.a, 0.3, 256);
  }
  return total;
}

}  // namespace

TEST_CASE("base cases") {
  const auto A = testing::load("fixture_a.json");
  CubicEngine e(A);
  CHECK(e.W(0, testing::first(1)).value == cx{});
  const auto p = testing::first(2);
  CHECK(rel(e.W(0, p).value, 1.0 / ((p[0] - p[1]) * (p[0] - p[1]))) < 1e-14);
  CHECK(e.R(1, 0, cx(0.7, 1.3), {}).value == cx{});
}

TEST_CASE("three-point function equals the Rauch form on both fixtures") {
  for (const char* name : {"fixture_a.json", "fixture_b.json"}) {
    const auto c = testing::load(name);
    CubicEngine e(c);
    const auto p = testing::first(3);
    CHECK(rel(e.W(0, p).value, rauch(c, p[0], p[1], p[2])) < 1e-9);
  }
}

TEST_CASE("planar index ranges reproduce the all-genus engine at h = 0") {
  for (const char* name : {"fixture_a.json", "fixture_b.json"}) {
    const auto c = testing::load(name);
    CubicEngine cubic(c);
    PlanarEngine planar(c);
    const auto p = testing::first(4);
    CHECK(rel(planar.W(0, p).value, cubic.W(0, p).value) < 1e-12);
    CHECK_THROWS_AS(planar.W(1, testing::first(1)), Error);
  }
}

TEST_CASE("symmetry and basepoint independence on the hyperelliptic fixture") {
  const auto A = testing::load("fixture_a.json");
  CubicEngine e(A);
  auto p = testing::first(4);
  const cx ref = e.W(0, p).value;
  std::sort(p.begin(), p.end(), [](cx a, cx b) { return a.real() < b.real(); });
  do {
    CHECK(rel(e.W(0, p).value, ref) < 1e-10);
  } while (std::next_permutation(p.begin(), p.end(), [](cx a, cx b) { return a.real() < b.real(); }));

  EvalConfig moved;
  moved.basepoint_o = cx(1.7, -0.4);
  CubicEngine e2(A, moved);
  const auto q = testing::first(2);
  CHECK(rel(e2.W(1, q).value, e.W(1, q).value) < 1e-10);
}

TEST_CASE("doubling the series order leaves values unchanged") {
  const auto B = testing::load("fixture_b.json");
  CubicEngine e(B);
  EvalConfig twice;
  twice.order = 2 * default_order(2, 1);
  CubicEngine e2(B, twice);
  const auto p = testing::first(2);
  CHECK(rel(e2.W(1, p).value, e.W(1, p).value) < 1e-10);
}

TEST_CASE("invalid arguments are reported with their error codes") {
  const auto A = testing::load("fixture_a.json");
  CubicEngine e(A);
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& err) {
      return err.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code([&] { e.W(0, {cx(1.0), cx(2.0), cx(3.0, 1.0)}); }) == ErrorCode::BranchPointArgument);
  CHECK(code([&] { e.W(0, {cx(2.0), cx(2.0), cx(3.0, 1.0)}); }) == ErrorCode::CoincidentPoints);
  CHECK(code([&] { e.R(0, 0, cx(0.7, 1.3), {cx(2.0)}); }) == ErrorCode::SheetIndexOutOfRange);
  CHECK(code([&] { e.R(2, 0, cx(0.7, 1.3), {cx(2.0)}); }) == ErrorCode::SheetIndexOutOfRange);
}

TEST_CASE("sheet-sum identity holds on the hyperelliptic fixture") {
  const auto A = testing::load("fixture_a.json");
  CubicEngine e(A);
  const cx z(0.7, 1.3);
  CHECK(identity_check(e, 0, z, testing::first(2)) < 1e-8);
  CHECK(identity_check(e, 1, z, testing::first(1)) < 1e-8);
  CHECK(identity_check(e, 1, z, testing::first(2)) < 1e-8);
}

TEST_CASE("closed-form R agrees with the recursion where the recursion is consistent") {
  const auto B = testing::load("fixture_b.json");
  CubicEngine e(B);
  const cx z(0.7, 1.3);
  const auto f = global_frame(B, algebra::Scalar(z));
  for (int k = 1; k <= 2; ++k) {
    const auto p = testing::first(k);
    for (int i = 1; i <= 2; ++i) CHECK(rel(R_closed(e, f, 0, i, 0, p), e.R(i, 0, z, p).value) < 1e-9);
  }
}
