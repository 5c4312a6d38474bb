// SPDX-License-Identifier: Apache-2.0
#include "algebra/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace twomat::algebra {

namespace {

constexpr int kMaxIter = 800;
constexpr int kRestarts = 4;

bool aberth(const std::vector<cx>& c, std::vector<cx>& z, std::mt19937& rng) {
  const int n = static_cast<int>(c.size()) - 1;
  double bound = 0.0;
  for (int i = 1; i <= n; ++i) bound = std::max(bound, std::pow(std::abs(c[n - i] / c[n]), 1.0 / i));
  bound = std::max(2.0 * bound, 1e-3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double phase = 2.0 * M_PI * u(rng);
  z.resize(n);
  for (int k = 0; k < n; ++k) {
    const double r = bound * (0.5 + 0.5 * u(rng));
    z[k] = std::polar(r, phase + 2.0 * M_PI * k / n);
  }
  for (int it = 0; it < kMaxIter; ++it) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      cx p = c[n], dp = 0.0;
      for (int j = n - 1; j >= 0; --j) {
        dp = dp * z[i] + p;
        p = p * z[i] + c[j];
      }
      if (p == cx{}) continue;
      const cx ratio = p / dp;
      cx sum{};
      for (int j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      const cx step = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return false;
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[i])));
    }
    if (worst < 1e-15) return true;
  }
  return true;
}

double derivative_test(const Polynomial& p, cx z, int order) {
  Polynomial d = p;
  for (int j = 0; j < order; ++j) d = d.derivative();
  const double scale = std::max(d.norm(), 1e-300) * std::pow(1.0 + std::abs(z), std::max(d.degree(), 0));
  return std::abs(d(z)) / scale;
}

}  // namespace

std::vector<RootInfo> poly_roots(const Polynomial& p, unsigned seed) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "root finding on the zero polynomial");
  if (p.degree() < 1) fail(ErrorCode::DegreeZero, "root finding on a constant polynomial");

  std::vector<cx> c = p.coeffs();
  int zeros = 0;
  while (c[zeros] == cx{}) ++zeros;
  c.erase(c.begin(), c.begin() + zeros);

  std::vector<cx> z;
  if (c.size() > 1) {
    std::mt19937 rng(seed);
    const Polynomial q(c);
    bool ok = false;
    for (int attempt = 0; attempt < kRestarts && !ok; ++attempt) {
      if (!aberth(c, z, rng)) continue;
      ok = std::all_of(z.begin(), z.end(), [&](cx r) {
        const double scale = q.norm() * std::pow(1.0 + std::abs(r), q.degree());
        return std::abs(q(r)) <= 1e-6 * scale;
      });
    }
    if (!ok) fail(ErrorCode::NoConvergence, "Aberth iteration did not converge");
  }
  for (int i = 0; i < zeros; ++i) z.push_back(0.0);

  // Cluster nearby approximations into multiple roots.
  const int n = static_cast<int>(z.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(z[i] - z[j]) <= 1e-8 * (1.0 + std::abs(z[i]))) parent[find(i)] = find(j);

  struct Cluster {
    cx mean;
    int multiplicity;
    int rep;
  };
  auto collect = [&]() {
    std::vector<Cluster> out;
    std::vector<int> seen(n, -1);
    for (int i = 0; i < n; ++i) {
      const int r = find(i);
      if (seen[r] < 0) {
        seen[r] = static_cast<int>(out.size());
        out.push_back({z[i], 1, i});
      } else {
        Cluster& cl = out[seen[r]];
        cl.mean = (cl.mean * double(cl.multiplicity) + z[i]) / double(cl.multiplicity + 1);
        cl.multiplicity += 1;
      }
    }
    return out;
  };

  // Multiple roots converge only to about sqrt(eps); merge looser clusters whose mean
  // annihilates the appropriate derivatives.
  bool merged = true;
  while (merged) {
    merged = false;
    const std::vector<Cluster> cur = collect();
    for (size_t a = 0; a < cur.size() && !merged; ++a) {
      for (size_t b = a + 1; b < cur.size() && !merged; ++b) {
        if (std::abs(cur[a].mean - cur[b].mean) > 1e-4 * (1.0 + std::abs(cur[a].mean))) continue;
        const int m = cur[a].multiplicity + cur[b].multiplicity;
        const cx mean =
            (cur[a].mean * double(cur[a].multiplicity) + cur[b].mean * double(cur[b].multiplicity)) / double(m);
        bool multiple = true;
        for (int j = 0; j < m && multiple; ++j) multiple = derivative_test(p, mean, j) <= 1e-7;
        if (!multiple) continue;
        parent[find(cur[a].rep)] = find(cur[b].rep);
        merged = true;
      }
    }
  }

  std::vector<RootInfo> out;
  for (const auto& cl : collect()) out.push_back({cl.mean, cl.multiplicity});
  // Polish each root by Newton steps on the derivative of order multiplicity-1, where it
  // is a simple root.
  for (auto& r : out) {
    Polynomial f = p;
    for (int j = 1; j < r.multiplicity; ++j) f = f.derivative();
    const Polynomial df = f.derivative();
    for (int it = 0; it < 3; ++it) {
      const cx d = df(r.root);
      if (d == cx{}) break;
      r.root -= f(r.root) / d;
    }
  }
  std::sort(out.begin(), out.end(), [](const RootInfo& a, const RootInfo& b) {
    if (a.root.real() != b.root.real()) return a.root.real() < b.root.real();
    return a.root.imag() < b.root.imag();
  });
  return out;
}

}  // namespace twomat::algebra
