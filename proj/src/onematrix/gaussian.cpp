// SPDX-License-Identifier: Apache-2.0
#include "onematrix/gaussian.hpp"

#include <algorithm>
#include <random>

#include "common/error.hpp"
#include "diagrams/diagram.hpp"
#include "onematrix/onematrix.hpp"

namespace twomat::onematrix {

namespace {

// Points in the disk |z| < 2.5 kept away from the branch points, the basepoint, 0 and each other.
std::vector<cx> random_points(const curve::SpectralCurve& c, cx o, int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  std::vector<cx> pts;
  while (static_cast<int>(pts.size()) < n) {
    const cx z{u(rng), u(rng)};
    if (std::abs(z) > 2.5 || std::abs(z) < 0.3 || std::abs(z - o) < 0.3) continue;
    if (std::any_of(c.branch().begin(), c.branch().end(), [&](const auto& b) { return std::abs(z - b.a) < 0.3; }))
      continue;
    if (std::any_of(pts.begin(), pts.end(), [&](cx p) { return std::abs(z - p) < 0.3; })) continue;
    pts.push_back(z);
  }
  return pts;
}

double rel(cx a, cx b) { return std::abs(a - b) / std::max(std::abs(a), 1e-300); }

}  // namespace

LimitReport gaussian_limit_compare(const curve::SpectralCurve& c, int nmax, int hmax,
                                   const correlators::EvalConfig& cfg, std::uint32_t seed, int probes,
                                   int colored_size) {
  if (c.d2() != 1 || !is_hyperelliptic(c)) fail(ErrorCode::NotHyperelliptic, "curve is not hyperelliptic");
  std::mt19937 rng(seed);
  LimitReport rep;
  correlators::CubicEngine cubic(c, cfg);
  Options opt;
  opt.order = cfg.order;
  opt.max_retries = cfg.max_retries;
  OneMatrixEngine one(c, opt);

  for (int h = 0; h <= hmax; ++h)
    for (int n = 1; n <= nmax; ++n) {
      if (h == 0 && n == 1) continue;
      LimitEntry e;
      e.n = n;
      e.h = h;
      e.points = random_points(c, cfg.basepoint_o, n, rng);
      e.two_matrix = cubic.W(h, e.points).value;
      e.one_matrix = one.W(h, e.points).value;
      e.relative = rel(e.two_matrix, e.one_matrix);
      rep.max_relative = std::max(rep.max_relative, e.relative);
      rep.entries.push_back(std::move(e));
    }

  for (int p = 0; p < probes; ++p)
    for (int h = 0; h <= hmax; ++h)
      for (int k = 0; k + 1 <= nmax; ++k) {
        if (h == 0 && k == 0) continue;
        const auto pts = random_points(c, cfg.basepoint_o, k + 1, rng);
        RelationEntry r;
        r.k = k;
        r.h = h;
        r.z = pts[0];
        const std::vector<cx> K(pts.begin() + 1, pts.end());
        r.R = cubic.R(1, h, r.z, K).value;
        const cx zbar = involution(c, r.z);
        std::vector<cx> at_bar{zbar}, at_z{r.z};
        at_bar.insert(at_bar.end(), K.begin(), K.end());
        at_z.insert(at_z.end(), K.begin(), K.end());
        const cx xb = c.dx()(zbar), xz = c.dx()(r.z);
        const cx yb = c.y()(zbar), yz = c.y()(r.z);
        r.conjugate_form = cubic.W(h, at_bar).value / ((yb - yz) * xb);
        r.symmetric_form = cubic.W(h, at_z).value / (2.0 * yz * xz);
        r.conjugate_residual = rel(r.conjugate_form, r.R);
        r.symmetric_residual = rel(r.symmetric_form, r.R);
        r.symmetric_applies = !(h == 0 && k == 1);
        rep.max_conjugate_residual = std::max(rep.max_conjugate_residual, r.conjugate_residual);
        if (r.symmetric_applies) rep.max_symmetric_residual = std::max(rep.max_symmetric_residual, r.symmetric_residual);
        rep.relation.push_back(std::move(r));
      }

  for (int h = 0; 2 * h <= colored_size; ++h)
    for (int k = 0; k + 2 * h <= colored_size; ++k) {
      const auto ds = diagrams::enumerate(k, h, diagrams::Theory::Cubic, c.d2());
      if (ds.empty()) continue;
      const auto pts = random_points(c, cfg.basepoint_o, k + 1, rng);
      for (const auto& d : ds) {
        if (std::none_of(d.vertices.begin(), d.vertices.end(),
                         [](const auto& v) { return v.kind == diagrams::VertexKind::ColoredTrivalent; }))
          continue;
        ++rep.colored_diagrams;
        rep.colored_max = std::max(rep.colored_max, std::abs(diagrams::evaluate(c, d, pts, cfg).value));
      }
    }
  return rep;
}

}  // namespace twomat::onematrix
