// SPDX-License-Identifier: Apache-2.0
#include "correlators/planar.hpp"

#include <unordered_map>

namespace twomat::correlators {

namespace {

class PlanarEval {
 public:
  PlanarEval(EngineBase& e, const Frame& f) : e_(e), f_(f) {}

  Tensor W(int n, int l, Slots K) {
    sort_slots(K);
    return e_.W_at(n, 0, f_.w[l], K);
  }

  Tensor R(int i, int k, int l0, Slots K) {
    if (k == 0) return Tensor();
    sort_slots(K);
    const std::string key = std::to_string(i) + ':' + std::to_string(l0) + '|' + slots_key(K);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Tensor acc = W(k + 1, i, K).scaled(f_.inv_xp[i]);
    for (int j = 1; j <= k - 1; ++j)
      for (const auto& [J, rest] : splittings(K, j))
        for (int l = 0; l < f_.sheets(); ++l) {
          if (l == l0 || l == i) continue;
          const Tensor r = R(i, j, l, J);
          if (r.is_zero()) continue;
          const Tensor w = W(k - j + 1, l, rest);
          if (!w.is_zero()) acc += r.outer(w).scaled(f_.inv_xp[l]);
        }
    acc = acc.scaled(f_.inv_dy[i][l0]);
    return memo_.emplace(key, std::move(acc)).first->second;
  }

  Tensor integrand(int k, const Slots& K) {
    Tensor acc;
    for (int i = 1; i < f_.sheets(); ++i)
      for (int j = 1; j <= k - 1; ++j)
        for (const auto& [J, rest] : splittings(K, j)) {
          const Tensor r = R(i, j, 0, J);
          if (r.is_zero()) continue;
          const Tensor w = W(k - j + 1, 0, rest);
          if (!w.is_zero()) acc += r.outer(w);
        }
    return acc;
  }

 private:
  EngineBase& e_;
  const Frame& f_;
  std::unordered_map<std::string, Tensor> memo_;
};

}  // namespace

PlanarEngine::PlanarEngine(curve::SpectralCurve c, EvalConfig cfg) : EngineBase(std::move(c), cfg) {}

Tensor PlanarEngine::integrand(const Frame& f, int k, int h, const Slots& K) {
  if (h != 0) fail(ErrorCode::InvalidArgument, "the planar recursion only covers h = 0");
  PlanarEval ev(*this, f);
  return ev.integrand(k, K);
}

}  // namespace twomat::correlators
