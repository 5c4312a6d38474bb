// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "algebra/polynomial.hpp"

namespace twomat::algebra {

struct RootInfo {
  cx root;
  int multiplicity;
};

// All roots of p with multiplicities, by Aberth simultaneous iteration with
// randomized restarts followed by clustering (tolerance 1e-8 (1 + |root|)).
std::vector<RootInfo> poly_roots(const Polynomial& p, unsigned seed = 12345u);

}  // namespace twomat::algebra
