// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "correlators/context.hpp"

namespace twomat::correlators {

struct CorrelatorValue {
  cx value{};
  int order_used = 0;    // series order of the outermost residue frames
  int retries = 0;
  double eps_residual = 0.0;   // largest negative-power coefficient of the coincidence regulator
  double dropped = 0.0;        // largest principal-part coefficient beyond the pole bound
};

// Largest pole order of W_n^(h) at a branch point in any of its arguments.
inline int max_pole(int n, int h) { return std::max(6 * h + 2 * n - 4, 1); }

class EngineBase;

// Cubic-recursion evaluation of W and R inside one frame of sheet values. Sym slots
// carry tensor axes over the branch-point principal-part basis.
class FrameEval {
 public:
  FrameEval(EngineBase& engine, const Frame& frame);

  // W_n^(h)(w_l, K).
  Tensor W_at(int n, int h, int l, Slots K);
  // R_k^{i,(h)}(w_l0; K).
  Tensor R(int i, int k, int h, int l0, Slots K);
  // Residue integrand of W_{k+1}^(h) at the physical sheet, before multiplying by dS.
  Tensor integrand(int k, int h, const Slots& K);

 private:
  // R_{k+1}^{i,(h-1)}(w_l; w_l, K), regulated by shifting the coincident argument.
  Tensor loop_term(int i, int k, int h, int l, const Slots& K);

  EngineBase& e_;
  const Frame& f_;
  std::unordered_map<std::string, Tensor> wmemo_;
  std::unordered_map<std::string, Tensor> rmemo_;
};

// Evaluation of a residue recursion that sums principal parts at the branch points.
// Subclasses supply the integrand of Res_{p' -> a_s} (...) dS_{p',o}(p) at the physical
// sheet; the base class builds coefficient tensors and numeric values from it.
class EngineBase {
 public:
  EngineBase(curve::SpectralCurve c, EvalConfig cfg);
  virtual ~EngineBase() = default;

  const curve::SpectralCurve& curve() const noexcept { return c_; }
  const EvalConfig& config() const noexcept { return cfg_; }
  const std::vector<cx>& centers() const noexcept { return centers_; }

  // W_n^(h)(points), n = points.size().
  CorrelatorValue W(int h, const std::vector<cx>& points);

  // Principal-part coefficients of W_n^(h): axis 0 is the head basis (basepoint term,
  // then (p - a_s)^{-m}), axes 1..n-1 the tail bases (q - a_s)^{-m}.
  const Tensor& coefficients(int n, int h);
  // W_n^(h)(head, K) from the base cases or the coefficient tensors.
  Tensor W_at(int n, int h, const Scalar& head, const Slots& K);

  int order_for(int n, int h) const;
  int eps_window() const;
  void note_dropped(double d) { dropped_ = std::max(dropped_, d); }
  void note_eps(double d) { eps_ = std::max(eps_, d); }

 protected:
  virtual Tensor integrand(const Frame& f, int k, int h, const Slots& K) = 0;

  template <class F>
  CorrelatorValue with_retries(int n, int h, F&& body);
  void check_points(const std::vector<cx>& points) const;
  const Frame& frame(int branch, int order);

 private:
  void reset(int retry);

  curve::SpectralCurve c_;
  EvalConfig cfg_;
  std::vector<cx> centers_;
  int retry_ = 0;
  std::map<std::pair<int, int>, Tensor> tensors_;
  std::map<std::pair<int, int>, std::unique_ptr<Frame>> frames_;
  double dropped_ = 0.0;
  double eps_ = 0.0;
};

// Cubic recursion for the non-mixed correlators W_n^(h) and the auxiliary R_k^{i,(h)}.
// Values use the reduced convention: differentials are divided by their dz factors.
class CubicEngine : public EngineBase {
 public:
  explicit CubicEngine(curve::SpectralCurve c, EvalConfig cfg = {});

  // R_k^{i,(h)}(z; points) with z on the physical sheet, k = points.size().
  CorrelatorValue R(int i, int h, cx z, const std::vector<cx>& points);

 protected:
  Tensor integrand(const Frame& f, int k, int h, const Slots& K) override;
};

template <class F>
CorrelatorValue EngineBase::with_retries(int n, int h, F&& body) {
  for (int r = 0; r <= cfg_.max_retries; ++r) {
    reset(r);
    try {
      CorrelatorValue v;
      v.value = body();
      v.order_used = order_for(n, h);
      v.retries = r;
      v.eps_residual = eps_;
      v.dropped = dropped_;
      return v;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::WindowMiss) throw;
    }
  }
  fail(ErrorCode::TruncationExhausted,
       "series windows too small after " + std::to_string(cfg_.max_retries) + " doublings");
}

}  // namespace twomat::correlators
