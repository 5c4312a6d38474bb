// SPDX-License-Identifier: Apache-2.0
#include "effective/effective.hpp"

namespace twomat::effective {

using correlators::Slot;
using correlators::SlotKind;

// Vertex sums R0 and their W factors inside one frame.
class VertexEval {
 public:
  VertexEval(EffectiveEngine& e, const Frame& f) : e_(e), f_(f) {}

  Tensor R0(int genus, Slots L) {
    correlators::sort_slots(L);
    const std::string key = std::to_string(genus) + '|' + correlators::slots_key(L);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Tensor acc;
    for (const auto& term : e_.terms(static_cast<int>(L.size()), genus)) {
      Tensor prod = Tensor::scalar(algebra::Scalar(1.0));
      for (const auto& b : term.blocks) {
        const Tensor w = block(b, L);
        if (w.is_zero()) {
          prod = Tensor();
          break;
        }
        prod = prod.outer(w);
      }
      if (!prod.is_zero()) acc += prod;
    }
    return memo_.emplace(key, std::move(acc)).first->second;
  }

  Tensor integrand(int k, int h, const Slots& K) {
    Tensor acc;
    for (int m = 0; m <= h; ++m)
      for (int j = 0; j <= k; ++j) {
        if ((m == 0 && j == 0) || (m == h && j == k)) continue;
        for (const auto& [J, rest] : correlators::splittings(K, j)) {
          const Tensor r = R0(m, J);
          if (r.is_zero()) continue;
          const Tensor w = e_.W_at(k - j + 1, h - m, f_.w[0], rest);
          if (w.is_zero()) continue;
          acc += r.outer(w);
        }
      }
    if (h >= 1) {
      Slots K2 = K;
      K2.push_back(Slot{SlotKind::Num, correlators::kInternalSlotId, f_.w[0], 0});
      acc += R0(h - 1, K2);
    }
    return acc.scaled(algebra::Scalar(-1.0));
  }

 private:
  Tensor block(const Block& b, const Slots& L) {
    Slots tails;
    for (size_t a = 1; a < b.sheets.size(); ++a)
      tails.push_back(Slot{SlotKind::Num, correlators::kInternalSlotId + 1 + b.sheets[a], f_.w[b.sheets[a]], 0});
    for (int lab : b.labels) tails.push_back(L[lab]);
    const int n = static_cast<int>(tails.size()) + 1;
    Tensor w = e_.W_at(n, b.genus, f_.w[b.sheets.front()], tails);
    if (w.is_zero()) return w;
    algebra::Scalar kernel(1.0);
    for (int j : b.sheets) kernel = kernel * f_.inv_xp[j] * f_.inv_dy[0][j];
    return w.scaled(kernel);
  }

  EffectiveEngine& e_;
  const Frame& f_;
  std::unordered_map<std::string, Tensor> memo_;
};

EffectiveEngine::EffectiveEngine(curve::SpectralCurve c, EvalConfig cfg, std::size_t budget)
    : EngineBase(std::move(c), cfg), budget_(budget) {}

const std::vector<PartitionTerm>& EffectiveEngine::terms(int n_labels, int genus) {
  const std::string key = std::to_string(n_labels) + ':' + std::to_string(genus);
  if (auto it = terms_.find(key); it != terms_.end()) return it->second;
  return terms_.emplace(key, canonical_terms(curve().d2(), n_labels, genus, budget_)).first->second;
}

Tensor EffectiveEngine::integrand(const Frame& f, int k, int h, const Slots& K) {
  VertexEval ev(*this, f);
  return ev.integrand(k, h, K);
}

}  // namespace twomat::effective
