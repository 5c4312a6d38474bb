// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <unordered_map>

#include "correlators/engine.hpp"
#include "effective/partitions.hpp"

namespace twomat::effective {

using correlators::CorrelatorValue;
using correlators::EvalConfig;
using correlators::Frame;
using correlators::Slots;
using correlators::Tensor;

// Effective (multivalent-vertex) recursion:
//   W_{k+1}^(h)(p, K) = -sum_s Res_{p' -> a_s} dS_{p',o}(p) [ sum R0_J^(m)(p') W_{k-|J|+1}^(h-m)(p', K - J)
//                        + R0_{K + p'}^(h-1)(p') ],
// where R0 sums products of W's over disjoint blocks of non-physical sheets.
class EffectiveEngine : public correlators::EngineBase {
 public:
  explicit EffectiveEngine(curve::SpectralCurve c, EvalConfig cfg = {}, std::size_t budget = 1 << 20);

 protected:
  Tensor integrand(const Frame& f, int k, int h, const Slots& K) override;

 private:
  std::size_t budget_;
  std::unordered_map<std::string, std::vector<PartitionTerm>> terms_;
  const std::vector<PartitionTerm>& terms(int n_labels, int genus);
  friend class VertexEval;
};

}  // namespace twomat::effective
