// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <functional>
#include <set>

#include "algebra/series.hpp"
#include "correlators/engine.hpp"
#include "diagrams/diagram.hpp"
#include "effective/effective.hpp"
#include "helpers.hpp"
#include "onematrix/onematrix.hpp"

using namespace twomat;
using namespace twomat::diagrams;
using testing::cx;
using testing::rel;

TEST_CASE("cubic diagram counts") {
  CHECK(enumerate(1, 0, Theory::Cubic, 2).empty());
  CHECK(enumerate(2, 0, Theory::Cubic, 2).size() == 2);
  CHECK(enumerate(3, 0, Theory::Cubic, 2).size() == 18);
  CHECK(enumerate(0, 1, Theory::Cubic, 2).size() == 1);
  CHECK(enumerate(1, 1, Theory::Cubic, 2).size() == 7);
}

TEST_CASE("cubic diagrams obey the trivalent count law and the tree property") {
  for (int h = 0; h <= 2; ++h)
    for (int k = 0; k + 2 * h <= 5; ++k)
      for (const auto& d : enumerate(k, h, Theory::Cubic, 2)) {
        CHECK(d.trivalent() == 2 * h + k - 1);
        CHECK(d.loop_closures() == h);
        std::vector<int> parent(d.vertices.size(), -2);
        int leaves = 0;
        for (const auto& e : d.edges) {
          if (e.type != EdgeType::Plain) {
            REQUIRE(e.to >= 0);
            CHECK(parent[e.to] == -2);
            parent[e.to] = e.from;
          } else if (e.to < 0) {
            ++leaves;
          }
        }
        CHECK(leaves == k);
        for (size_t v = 0; v < parent.size(); ++v) CHECK(parent[v] < static_cast<int>(v));
        // Loop closures end on an ancestor of their origin.
        for (const auto& e : d.edges)
          if (e.type == EdgeType::Plain && e.to >= 0) {
            int a = e.from;
            while (a >= 0 && a != e.to) a = parent[a];
            CHECK(a == e.to);
          }
      }
}

TEST_CASE("diagrams are pairwise distinct") {
  const auto ds = enumerate(2, 1, Theory::Cubic, 2);
  std::set<std::string> keys;
  for (const auto& d : ds) keys.insert(d.tree->key);
  CHECK(keys.size() == ds.size());
}

TEST_CASE("uncolored cubic diagrams correspond to one-matrix terms") {
  for (int h = 0; h <= 2; ++h)
    for (int k = h == 0 ? 2 : 0; k + 2 * h <= 5; ++k)  // W_2^(0) is the bare propagator
      CHECK(count_uncolored(enumerate(k, h, Theory::Cubic, 1)) == onematrix::count_terms(k, h));
}

TEST_CASE("effective vertices have valence r + 2 with r <= d2") {
  for (int d2 = 1; d2 <= 3; ++d2)
    for (const auto& d : enumerate(3, 0, Theory::Effective, d2))
      for (const auto& v : d.vertices)
        if (v.kind == VertexKind::Multivalent) {
          CHECK(v.r >= 1);
          CHECK(v.r <= d2);
          CHECK(v.valence == v.r + 2);
        }
}

TEST_CASE("diagram sums reproduce the recursions") {
  for (const char* name : {"fixture_a.json", "fixture_b.json"}) {
    const auto c = testing::load(name);
    correlators::CubicEngine cubic(c);
    effective::EffectiveEngine eff(c);
    for (auto [k, h] : std::vector<std::pair<int, int>>{{2, 0}, {3, 0}, {0, 1}, {1, 1}, {0, 2}}) {
      const auto p = testing::first(k + 1);
      CHECK(rel(diagram_sum(c, k, h, Theory::Cubic, p).value, cubic.W(h, p).value) < 1e-9);
      CHECK(rel(diagram_sum(c, k, h, Theory::Effective, p).value, eff.W(h, p).value) < 1e-9);
    }
  }
}

TEST_CASE("a single three-point diagram is one summand of the expanded residue") {
  // On x = z + 1/z the conjugate sheet is 1/z; the summand with p_1 on the waved side is
  // Res B(1/q, p_1) (-1/q^2)^0 / (x'(1/q) (y(1/q) - y(q))) B(q, p_2) dS_{q,o}(p).
  const auto A = testing::load("fixture_a.json");
  const auto p = testing::first(3);
  const cx o = correlators::EvalConfig{}.basepoint_o;
  auto summand = [&](cx a, cx b) {
    cx total{};
    for (const auto& br : A.branch()) {
      auto f = [&](cx q) {
        const cx qb = 1.0 / q;
        const cx kernel = 1.0 / (A.dx()(qb) * (A.y()(qb) - A.y()(q)));
        return 1.0 / ((qb - a) * (qb - a)) * kernel / ((q - b) * (q - b)) * (1.0 / (p[0] - q) - 1.0 / (p[0] - o));
      };
      total += algebra::residue_quadrature(f, br.a, 0.3, 256);
    }
    return total;
  };
  const cx s12 = summand(p[1], p[2]), s21 = summand(p[2], p[1]);
  const auto ds = enumerate(2, 0, Theory::Cubic, 1);
  REQUIRE(ds.size() == 2);
  for (const auto& d : ds) {
    const cx v = evaluate(A, d, p).value;
    CHECK(std::min(rel(v, s12), rel(v, s21)) < 1e-9);
  }
  CHECK(rel(evaluate(A, ds[0], p).value + evaluate(A, ds[1], p).value, s12 + s21) < 1e-9);
}

TEST_CASE("colored diagrams vanish on a two-sheeted curve") {
  const auto A = testing::load("fixture_a.json");
  const auto p = testing::first(4);
  int colored = 0;
  for (const auto& d : enumerate(3, 0, Theory::Cubic, 1)) {
    if (count_uncolored({d}) == 1) continue;
    ++colored;
    CHECK(evaluate(A, d, p).value == cx{});
  }
  CHECK(colored == 6);
}

TEST_CASE("export lists vertices and typed edges") {
  const auto ds = enumerate(2, 0, Theory::Cubic, 2);
  const auto j = to_json(ds);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["vertices"][0]["kind"] == "residue-trivalent");
  CHECK(j[0]["edges"][0]["from"] == "root");
  CHECK(j[0]["trivalent"] == 1);
  std::set<std::string> types;
  for (const auto& e : j[0]["edges"]) types.insert(e["type"].get<std::string>());
  CHECK(types == std::set<std::string>{"arrowed", "arrowed-waved", "plain"});
}
