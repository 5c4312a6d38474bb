// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <vector>

#include "algebra/tensor.hpp"
#include "curve/curve.hpp"

namespace twomat::onematrix {

using algebra::cx;
using algebra::Scalar;
using algebra::Tensor;

struct Options {
  int order = 0;  // 0 selects 6h + 2n + 8
  int max_retries = 3;
  double tol = 1e-8;  // involution check tolerance
};

struct Value {
  cx value{};
  int order_used = 0;
  int retries = 0;
};

// True when x(zbar) = x(z) and y(zbar) = -y(z) at the probes, zbar the other preimage.
bool is_hyperelliptic(const curve::SpectralCurve& c, double tol = 1e-8);
// The other preimage of x(z) on a two-sheeted curve.
cx involution(const curve::SpectralCurve& c, cx z);

// Number of terms in the full expansion of the recursion below for W_{k+1}^(h): the
// one-matrix diagrams with k leaves and h loops.
std::size_t count_terms(int k, int h);

// Recursion of the hermitian one-matrix model written with the local deck involution:
//   W_{n+1}^(h)(p, K) = sum_s Res_{q -> a_s} K(p, q) [ W_{n+2}^(h-1)(q, qbar, K)
//                        + sum' W^(m)(q, I) W^(h-m)(qbar, K - I) ],
//   K(p, q) = (1/(p - q) - 1/(p - qbar)) / (2 (y(q) - y(qbar)) dx(q)).
// Coefficients are principal parts at the branch points in every argument.
class OneMatrixEngine {
 public:
  // With require_hyperelliptic the curve must pass is_hyperelliptic (NotHyperelliptic otherwise).
  explicit OneMatrixEngine(curve::SpectralCurve c, Options opt = {}, bool require_hyperelliptic = true);

  Value W(int h, const std::vector<cx>& points);
  const curve::SpectralCurve& curve() const noexcept { return c_; }

 private:
  struct Arg {
    bool symbolic = false;
    int label = 0;
    Scalar value;
  };
  struct Local {
    Scalar q, qbar, dqbar, kernel;  // kernel = qbar' / (2 (y(q) - y(qbar)) x'(q))
  };

  const Tensor& coeffs(int n, int h);
  Tensor value_at(int n, int h, const Scalar& head, const std::vector<Arg>& tails, int pole_dim);
  Tensor bracket(const Local& L, int k, int h, const std::vector<Arg>& K, int pole_dim);
  const Local& local(int s, int order);
  int order_for(int n, int h) const;
  std::vector<Scalar> powers(const Scalar& z, int s, int M) const;

  curve::SpectralCurve c_;
  Options opt_;
  std::vector<cx> a_;
  int retry_ = 0;
  std::map<std::pair<int, int>, Tensor> coeffs_;
  std::map<std::pair<int, int>, Local> locals_;
};

}  // namespace twomat::onematrix
