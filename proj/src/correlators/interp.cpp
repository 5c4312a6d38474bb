// SPDX-License-Identifier: Apache-2.0
#include "correlators/interp.hpp"

#include <algorithm>

namespace twomat::correlators {

namespace {

struct ClosedSum {
  EngineBase& e;
  const Frame& f;
  int target;
  std::size_t budget;
  std::size_t terms = 0;

  cx y(int s) const { return f.y[s].number(); }
  cx xp(int s) const { return f.xp[s].number(); }

  cx W(int h, cx head, const std::vector<cx>& args) {
    Slots K;
    int id = 1;
    for (cx a : args) K.push_back(Slot{SlotKind::Num, id++, Scalar(a), 0});
    return e.W_at(static_cast<int>(args.size()) + 1, h, Scalar(head), K).value().number();
  }

  // Subsets of `items` as (chosen, rest) pairs.
  template <class T>
  static std::vector<std::pair<std::vector<T>, std::vector<T>>> subsets(const std::vector<T>& items) {
    std::vector<std::pair<std::vector<T>, std::vector<T>>> out;
    const std::size_t n = items.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<T> in, rest;
      for (std::size_t b = 0; b < n; ++b) (mask >> b & 1 ? in : rest).push_back(items[b]);
      out.emplace_back(std::move(in), std::move(rest));
    }
    return out;
  }

  // One block W^(g)(head sheet, labels, tail sheets) with its sheet weights.
  cx block(int head, int g, const std::vector<cx>& labels, const std::vector<int>& tails, bool is_target) {
    if (labels.empty() && tails.empty() && g == 0) return 0.0;
    if (++terms > budget) fail(ErrorCode::BudgetExceeded, "partition sum exceeds the term budget");
    std::vector<cx> args = labels;
    cx weight = 1.0 / xp(head);
    if (!is_target) weight /= y(target) - y(head);
    for (int s : tails) {
      args.push_back(f.w[s].number());
      weight /= (y(target) - y(s)) * xp(s);
    }
    return weight * W(g, f.w[head].number(), args);
  }

  // Blocks after the head: next head sheet above `last`, genus budget `g_left`.
  cx rest_blocks(int last, std::vector<int> free_sheets, const std::vector<cx>& labels, int g_left) {
    if (labels.empty() && g_left == 0) return 1.0;
    cx total = 0.0;
    for (std::size_t a = 0; a < free_sheets.size(); ++a) {
      const int head = free_sheets[a];
      if (head <= last) continue;
      std::vector<int> others = free_sheets;
      others.erase(others.begin() + static_cast<std::ptrdiff_t>(a));
      for (const auto& [tails, unused] : subsets(others)) {
        const int t = static_cast<int>(tails.size());
        if (t > g_left) continue;
        for (const auto& [mine, left] : subsets(labels))
          for (int g = 0; g + t <= g_left; ++g) {
            const cx b = block(head, g, mine, tails, false);
            if (b == cx{}) continue;
            total += b * rest_blocks(head, unused, left, g_left - g - t);
          }
      }
    }
    return total;
  }
};

cx lagrange(const std::vector<cx>& nodes, const std::vector<cx>& values, cx y) {
  cx out = 0.0;
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    cx l = 1.0;
    for (std::size_t b = 0; b < nodes.size(); ++b)
      if (b != a) l *= (y - nodes[b]) / (nodes[a] - nodes[b]);
    out += l * values[a];
  }
  return out;
}

}  // namespace

cx R_closed(EngineBase& e, const Frame& f, int base, int target, int h, const std::vector<cx>& labels,
            std::size_t budget) {
  if (base == target) fail(ErrorCode::InvalidArgument, "R needs distinct base and target sheets");
  ClosedSum cs{e, f, target, budget};
  std::vector<int> free_sheets;
  for (int s = 0; s < f.sheets(); ++s)
    if (s != base && s != target) free_sheets.push_back(s);
  cx total = 0.0;
  for (const auto& [tails, unused] : ClosedSum::subsets(free_sheets)) {
    const int t = static_cast<int>(tails.size());
    if (t > h) continue;
    for (const auto& [mine, left] : ClosedSum::subsets(labels))
      for (int g = 0; g + t <= h; ++g) {
        const cx b = cs.block(target, g, mine, tails, true);
        if (b == cx{}) continue;
        total += b * cs.rest_blocks(-1, unused, left, h - g - t);
      }
  }
  return total / (cs.y(target) - cs.y(base));
}

cx U_frame(EngineBase& e, const Frame& f, int base, cx y, int h, const std::vector<cx>& labels,
           std::size_t budget) {
  std::vector<cx> ys;
  for (const auto& v : f.y) ys.push_back(v.number());
  const cx g = e.curve().g_lead();
  const cx xp = f.xp[base].number();
  if (labels.empty() && h == 0) {
    cx p = -g;
    for (int s = 0; s < f.sheets(); ++s)
      if (s != base) p *= y - ys[s];
    return p * xp;
  }
  std::vector<cx> nodes, values;
  for (int t = 0; t < f.sheets(); ++t) {
    if (t == base) continue;
    const cx ey = curve::ey_at(e.curve(), f.y, t).number();
    nodes.push_back(ys[t]);
    values.push_back(ey * xp * R_closed(e, f, base, t, h, labels, budget));
  }
  return lagrange(nodes, values, y);
}

cx U_interp(EngineBase& e, int h, cx z, cx y, const std::vector<cx>& points, std::size_t budget) {
  const Frame f = global_frame(e.curve(), Scalar(z));
  return U_frame(e, f, 0, y, h, points, budget);
}

IdentitySides identity_sides(EngineBase& e, int h, cx z, const std::vector<cx>& points, std::size_t budget) {
  const int k = static_cast<int>(points.size());
  if (k < 1 || h < 0) fail(ErrorCode::InvalidArgument, "identity needs k >= 1 and h >= 0");
  const Frame f = global_frame(e.curve(), Scalar(z));
  const cx y0 = f.y[0].number();
  auto W = [&](int g, cx head, const std::vector<cx>& args) {
    Slots K;
    int id = 1;
    for (cx a : args) K.push_back(Slot{SlotKind::Num, id++, Scalar(a), 0});
    return e.W_at(static_cast<int>(args.size()) + 1, g, Scalar(head), K).value().number();
  };
  auto side = [&](int b) {
    const cx pb = f.w[b].number();
    cx acc = 0.0;
    for (int m = 0; m <= h; ++m)
      for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<cx> J, rest;
        for (int a = 0; a < k; ++a) (mask >> a & 1 ? J : rest).push_back(points[a]);
        if (m == h && static_cast<int>(J.size()) == k) continue;
        const cx w = W(m, pb, J);
        if (w == cx{}) continue;
        acc += w * U_frame(e, f, b, y0, h - m, rest, budget);
      }
    if (h >= 1) {
      std::vector<cx> labels{pb};
      labels.insert(labels.end(), points.begin(), points.end());
      acc += U_frame(e, f, b, y0, h - 1, labels, budget);
    }
    return acc;
  };
  IdentitySides out;
  out.physical = side(0);
  const cx xp0 = f.xp[0].number();
  for (int i = 1; i < f.sheets(); ++i) {
    const cx r = xp0 / f.xp[i].number();
    out.sheets += side(i) * r * r;
  }
  const double scale = std::max(std::abs(out.physical), std::abs(out.sheets));
  out.residual = scale == 0.0 ? 0.0 : std::abs(out.physical - out.sheets) / scale;
  return out;
}

double identity_check(EngineBase& e, int h, cx z, const std::vector<cx>& points, std::size_t budget) {
  return identity_sides(e, h, z, points, budget).residual;
}

}  // namespace twomat::correlators
