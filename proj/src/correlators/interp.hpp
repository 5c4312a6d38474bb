// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "correlators/engine.hpp"

namespace twomat::correlators {

inline constexpr std::size_t kDefaultTermBudget = std::size_t{1} << 20;

// R_k^{t,(h)}(p^b; K) from the explicit partition sum for U_k^(h)(p^b, y(p^t); K):
// a head block W^(h_1)(p^t, K_1, tails) and further blocks W^(h_a)(p^j, K_a, tails) whose
// sheets are pairwise distinct and avoid {b, t}, each weighted by 1/((y_t - y_j) x'_j),
// subject to sum_a (h_a + |K_a| + |tails_a|) = h + k. Blocks beyond the head are ordered
// by their first sheet; tail sheets are unordered. Labels are numeric points; the W values
// come from the engine. k = labels.size().
cx R_closed(EngineBase& e, const Frame& f, int base, int target, int h, const std::vector<cx>& labels,
            std::size_t budget = kDefaultTermBudget);

// Reduced U_k^(h)(p^b, y; K) with K = labels: E_y(x, y_t) x'(p^b) R^t(p^b) at the d2 sample
// values y = y(p^t), t != b, then Lagrange interpolation in y. U_0^(0) = E(x, y) dx / (y - y(p)).
cx U_frame(EngineBase& e, const Frame& f, int base, cx y, int h, const std::vector<cx>& labels,
           std::size_t budget = kDefaultTermBudget);

// U_k^(h)(z, y; points) with z on the physical sheet, k = points.size().
cx U_interp(EngineBase& e, int h, cx z, cx y, const std::vector<cx>& points,
            std::size_t budget = kDefaultTermBudget);

struct IdentitySides {
  cx physical{};   // sum_{(m,j) != (h,k)} W^(m)(p, J) U^(h-m)(p, y(p); K - J) + U^(h-1)(p, y(p); p, K)
  cx sheets{};     // the same expression summed over p^i, i = 1..d2, expressed in dz(p)^2
  double residual = 0.0;  // |physical - sheets| / max(|physical|, |sheets|)
};

// Both sides of the sheet-sum identity for the U_k^(h), k = points.size(), at z.
IdentitySides identity_sides(EngineBase& e, int h, cx z, const std::vector<cx>& points,
                             std::size_t budget = kDefaultTermBudget);
double identity_check(EngineBase& e, int h, cx z, const std::vector<cx>& points,
                      std::size_t budget = kDefaultTermBudget);

}  // namespace twomat::correlators
