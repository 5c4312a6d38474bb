// SPDX-License-Identifier: Apache-2.0
// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "common/error.hpp"
#include "correlators/engine.hpp"
#include "correlators/interp.hpp"
#include "curve/curve.hpp"
#include "diagrams/diagram.hpp"
#include "effective/effective.hpp"
#include "onematrix/gaussian.hpp"
#include "oracles.hpp"

namespace {

using oracle::cx;
using twomat::correlators::CubicEngine;
using twomat::correlators::EvalConfig;
using twomat::curve::SpectralCurve;
using twomat::effective::EffectiveEngine;
namespace dg = twomat::diagrams;

SpectralCurve load(const std::string& name) {
  std::ifstream in(std::string(TWOMAT_FIXTURES) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return twomat::curve::load_curve_json(ss.str());
}

struct Fixture {
  std::string name;
  SpectralCurve curve;
};

// Outcome of one criterion: pass flag plus a short summary of the worst case.
struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string label(const std::string& fixture, int n, int h) {
  return fixture + " (" + std::to_string(n) + "," + std::to_string(h) + ")";
}

const cx kBasepoint = EvalConfig{}.basepoint_o;

std::vector<cx> points(std::mt19937& rng, int n) { return oracle::random_points(rng, n, {kBasepoint}); }

std::vector<Fixture> fixtures() { return {{"A", load("fixture_a.json")}, {"B", load("fixture_b.json")}}; }

Outcome w2_closed_form(const std::vector<Fixture>& fx) {
  Outcome o;
  double worst = 0.0;
  std::mt19937 rng(11);
  for (const auto& f : fx) {
    CubicEngine e(f.curve);
    for (int t = 0; t < 20; ++t) {
      const auto p = points(rng, 2);
      const double r = oracle::relative(e.W(0, p).value, oracle::bergmann(p[0], p[1]));
      worst = std::max(worst, r);
      o.require(r < 1e-12, f.name + " pair " + std::to_string(t) + ": " + fmt(r));
    }
  }
  o.detail = "max rel " + fmt(worst);
  return o;
}

Outcome w3_rauch(const std::vector<Fixture>& fx) {
  Outcome o;
  double worst = 0.0;
  std::mt19937 rng(12);
  for (const auto& f : fx) {
    CubicEngine e(f.curve);
    for (int t = 0; t < 5; ++t) {
      const auto p = points(rng, 3);
      const cx want = f.name == "A" ? oracle::rauch<oracle::FixtureA>(p[0], p[1], p[2])
                                    : oracle::rauch<oracle::FixtureB>(p[0], p[1], p[2]);
      const double r = oracle::relative(e.W(0, p).value, want);
      worst = std::max(worst, r);
      o.require(r < 1e-8, f.name + " triple " + std::to_string(t) + ": " + fmt(r));
    }
  }
  o.detail = "max rel " + fmt(worst);
  return o;
}

Outcome permutation_symmetry(const std::vector<Fixture>& fx) {
  Outcome o;
  double worst = 0.0;
  std::mt19937 rng(13);
  for (const auto& f : fx) {
    CubicEngine e(f.curve);
    for (auto [n, h] : {std::pair{3, 0}, {4, 0}, {2, 1}}) {
      auto p = points(rng, n);
      std::sort(p.begin(), p.end(), [](cx a, cx b) { return a.real() < b.real(); });
      std::vector<cx> vals;
      do vals.push_back(e.W(h, p).value);
      while (std::next_permutation(p.begin(), p.end(), [](cx a, cx b) { return a.real() < b.real(); }));
      const double s = oracle::spread(vals);
      worst = std::max(worst, s);
      o.require(s < 1e-9, label(f.name, n, h) + ": " + fmt(s));
    }
  }
  o.detail = "max spread " + fmt(worst);
  return o;
}

Outcome basepoint_independence(const std::vector<Fixture>& fx) {
  Outcome o;
  double worst = 0.0;
  std::mt19937 rng(14);
  const std::vector<cx> bases{kBasepoint, {-0.71, 1.37}, {2.13, -0.41}};
  for (const auto& f : fx) {
    for (auto [n, h] : {std::pair{3, 0}, {1, 1}, {2, 1}}) {
      const auto p = oracle::random_points(rng, n, bases);
      std::vector<cx> vals;
      for (cx b : bases) {
        EvalConfig cfg;
        cfg.basepoint_o = b;
        vals.push_back(CubicEngine(f.curve, cfg).W(h, p).value);
      }
      const double s = oracle::spread(vals);
      worst = std::max(worst, s);
      o.require(s < 1e-9, label(f.name, n, h) + ": " + fmt(s));
    }
  }
  o.detail = "max spread " + fmt(worst);
  return o;
}

Outcome cross_engine(const std::vector<Fixture>& fx) {
  Outcome o;
  double worst_a = 0.0, worst_b = 0.0;
  std::mt19937 rng(15);
  for (const auto& f : fx) {
    for (int h = 0; 2 * h + 1 <= 5; ++h)
      for (int n = 1; n + 2 * h <= 5; ++n) {
        const auto p = points(rng, n);
        const cx cubic = CubicEngine(f.curve).W(h, p).value;
        const cx eff = EffectiveEngine(f.curve).W(h, p).value;
        const cx dcub = dg::diagram_sum(f.curve, n - 1, h, dg::Theory::Cubic, p, {}).value;
        const cx deff = dg::diagram_sum(f.curve, n - 1, h, dg::Theory::Effective, p, {}).value;
        double r = 0.0;
        for (cx v : {eff, dcub, deff}) r = std::max(r, oracle::relative(v, cubic));
        (f.name == "A" ? worst_a : worst_b) = std::max(f.name == "A" ? worst_a : worst_b, r);
        o.require(r < 1e-8, label(f.name, n, h) + ": " + fmt(r));
      }
  }
  o.detail = "max rel A " + fmt(worst_a) + ", B " + fmt(worst_b);
  return o;
}

Outcome diagram_counts() {
  Outcome o;
  const auto w4 = dg::enumerate(3, 0, dg::Theory::Cubic, 1);
  o.require(w4.size() == 18, "W_4^(0) count " + std::to_string(w4.size()));
  std::size_t total = 0;
  for (int h = 0; 2 * h <= 6; ++h)
    for (int k = 0; k + 2 * h <= 6; ++k)
      for (const auto& d : dg::enumerate(k, h, dg::Theory::Cubic, 1)) {
        ++total;
        const int want = 2 * h + k - 1;
        if (d.trivalent() != want)
          o.require(false, "(" + std::to_string(k) + "," + std::to_string(h) + ") trivalent " +
                               std::to_string(d.trivalent()) + " != " + std::to_string(want));
      }
  o.detail = "W_4^(0) has " + std::to_string(w4.size()) + " diagrams, " + std::to_string(total) + " checked";
  return o;
}

Outcome gaussian_limit(const std::vector<Fixture>& fx) {
  Outcome o;
  const auto rep = twomat::onematrix::gaussian_limit_compare(fx[0].curve, 3, 2);
  o.require(rep.max_relative < 1e-8, "max relative " + fmt(rep.max_relative));
  o.require(rep.colored_max == 0.0, "colored max " + fmt(rep.colored_max));
  o.detail = "max rel " + fmt(rep.max_relative) + ", " + std::to_string(rep.colored_diagrams) +
             " colored diagrams, max |value| " + fmt(rep.colored_max);
  return o;
}

Outcome identity_suite(const std::vector<Fixture>& fx) {
  Outcome o;
  double worst_a = 0.0, worst_b = 0.0;
  std::mt19937 rng(16);
  for (const auto& f : fx) {
    EffectiveEngine e(f.curve);
    for (int h = 0; h <= 3; ++h)
      for (int k = 1; k + h <= 4; ++k) {
        double worst = 0.0;
        for (int t = 0; t < 10; ++t) {
          const auto p = points(rng, k + 1);
          const std::vector<cx> K(p.begin() + 1, p.end());
          worst = std::max(worst, twomat::correlators::identity_check(e, h, p[0], K));
        }
        (f.name == "A" ? worst_a : worst_b) = std::max(f.name == "A" ? worst_a : worst_b, worst);
        o.require(worst < 1e-8, label(f.name, k, h) + ": " + fmt(worst));
      }
  }
  o.detail = "max residual A " + fmt(worst_a) + ", B " + fmt(worst_b);
  return o;
}

Outcome truncation(const std::vector<Fixture>& fx) {
  Outcome o;
  double worst = 0.0;
  std::mt19937 rng(17);
  for (const auto& f : fx)
    for (int n = 2; n <= 5; ++n) {
      const auto p = points(rng, n);
      const auto base = CubicEngine(f.curve).W(0, p);
      EvalConfig cfg;
      cfg.order = 2 * base.order_used;
      const double r = oracle::relative(CubicEngine(f.curve, cfg).W(0, p).value, base.value);
      worst = std::max(worst, r);
      o.require(r < 1e-10, label(f.name, n, 0) + ": " + fmt(r));
    }
  o.detail = "max rel " + fmt(worst);
  return o;
}

Outcome base_deltas(const std::vector<Fixture>& fx) {
  Outcome o;
  std::mt19937 rng(18);
  int checked = 0;
  for (const auto& f : fx) {
    CubicEngine e(f.curve);
    for (int i = 1; i <= f.curve.d2(); ++i)
      for (int t = 0; t < 5; ++t) {
        const cx z = points(rng, 1)[0];
        const cx v = e.R(i, 0, z, {}).value;
        ++checked;
        o.require(v == cx{}, f.name + " i=" + std::to_string(i) + ": " + fmt(std::abs(v)));
      }
  }
  o.detail = std::to_string(checked) + " values exactly 0";
  return o;
}

}  // namespace

int main() {
  const auto fx = fixtures();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"W2 closed form, 20 pairs per fixture, rel < 1e-12, < 1 s", [&] { return w2_closed_form(fx); }},
      {"W3 quadrature residue formula, 5 triples per fixture, rel < 1e-8, < 5 s", [&] { return w3_rauch(fx); }},
      {"permutation symmetry of W(3,0), W(4,0), W(2,1), spread < 1e-9", [&] { return permutation_symmetry(fx); }},
      {"basepoint independence for (3,0), (1,1), (2,1), spread < 1e-9", [&] { return basepoint_independence(fx); }},
      {"cubic = effective = diagram sums for n+2h <= 5, rel < 1e-8, < 60 s", [&] { return cross_engine(fx); }},
      {"18 diagrams for W_4^(0); 2h+k-1 trivalent vertices for k+2h <= 6", [] { return diagram_counts(); }},
      {"one-matrix limit for n <= 3, h <= 2, rel < 1e-8; colored diagrams vanish", [&] { return gaussian_limit(fx); }},
      {"sheet-sum identity for k+h <= 4, 10 probes, residual < 1e-8", [&] { return identity_suite(fx); }},
      {"doubling the series order changes genus-0 values by < 1e-10", [&] { return truncation(fx); }},
      {"R(i,0) = 0 exactly for i != 0", [&] { return base_deltas(fx); }},
  };
  const double budgets[] = {1.0, 5.0, 0.0, 0.0, 60.0, 0.0, 0.0, 0.0, 0.0, 0.0};

  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budgets[c] > 0 && secs >= budgets[c]) o.require(false, "runtime " + fmt(secs) + " s");
    std::printf("%s criterion %zu: %s [%s; %.2f s]\n", o.pass ? "PASS" : "FAIL", c + 1, criteria[c].first.c_str(),
                o.detail.c_str(), secs);
    for (const auto& f : o.failures) std::printf("    failed: %s\n", f.c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
