// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "correlators/engine.hpp"
#include "curve/curve.hpp"

namespace twomat::onematrix {

using algebra::cx;

// |W - W1mm| / |W| for W_n^(h) at one random point set; n counts the points.
struct LimitEntry {
  int n = 0;
  int h = 0;
  std::vector<cx> points;
  cx two_matrix{};
  cx one_matrix{};
  double relative = 0.0;
};

// R_k^{1,(h)}(z; K) against W_{k+1}^(h) at the conjugate sheet. On d2 = 1 the recursion
// gives R = w(zbar, K) / ((y(zbar) - y(z)) x'(zbar)) exactly; the symmetric form
// w(z, K) / (2 y(z) x'(z)) holds whenever W(z) + W(zbar) = 0, i.e. except for W_2^(0).
struct RelationEntry {
  int k = 0;
  int h = 0;
  cx z{};
  cx R{};
  cx conjugate_form{};
  cx symmetric_form{};
  double conjugate_residual = 0.0;
  double symmetric_residual = 0.0;
  bool symmetric_applies = true;
};

struct LimitReport {
  std::vector<LimitEntry> entries;
  std::vector<RelationEntry> relation;
  std::size_t colored_diagrams = 0;   // cubic diagrams with a colored vertex that were evaluated
  double colored_max = 0.0;           // largest |value| among them
  double max_relative = 0.0;
  double max_conjugate_residual = 0.0;
  double max_symmetric_residual = 0.0;  // over entries where the symmetric form applies
};

// Compares the cubic two-matrix engine with the one-matrix recursion for n <= nmax,
// h <= hmax at seeded random points, checks the R-W relation at `probes` points, and
// evaluates every colored cubic diagram with k + 2h <= colored_size. NotHyperelliptic
// when the curve is not two-sheeted with y(zbar) = -y(z).
LimitReport gaussian_limit_compare(const curve::SpectralCurve& c, int nmax, int hmax,
                                   const correlators::EvalConfig& cfg = {}, std::uint32_t seed = 1,
                                   int probes = 5, int colored_size = 4);

}  // namespace twomat::onematrix
