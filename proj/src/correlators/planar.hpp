// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "correlators/engine.hpp"

namespace twomat::correlators {

// Genus-zero recursion written with its own index ranges:
//   W_{k+1}(p, K) = sum_i sum_{j=1}^{k-1} sum_J Res R_j^i(p'; J) W_{k-j+1}(p', K - J) dS_{p',o}(p),
//   R_k^i(p^l0; K) = [W_{k+1}(p^i, K) + sum_{j=1}^{k-1} sum_J sum_{l != l0,i} R_j^i(p^l; J) W(p^l, K - J)]
//                    / ((y(p^i) - y(p^l0)) dx).
// Used to check the index filtering of the all-genus engine at h = 0.
class PlanarEngine : public EngineBase {
 public:
  explicit PlanarEngine(curve::SpectralCurve c, EvalConfig cfg = {});

 protected:
  Tensor integrand(const Frame& f, int k, int h, const Slots& K) override;
};

}  // namespace twomat::correlators
