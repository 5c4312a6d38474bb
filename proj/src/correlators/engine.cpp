// SPDX-License-Identifier: Apache-2.0
#include "correlators/engine.hpp"

#include <algorithm>

namespace twomat::correlators {

namespace {

std::string memo_key(int a, int b, int c, int d, const Slots& s) {
  return std::to_string(a) + ':' + std::to_string(b) + ':' + std::to_string(c) + ':' + std::to_string(d) + '|' +
         slots_key(s);
}

}  // namespace

FrameEval::FrameEval(EngineBase& engine, const Frame& frame) : e_(engine), f_(frame) {}

Tensor FrameEval::W_at(int n, int h, int l, Slots K) {
  if (n == 1 && h == 0) return Tensor();
  sort_slots(K);
  const std::string key = memo_key(n, h, l, 0, K);
  if (auto it = wmemo_.find(key); it != wmemo_.end()) return it->second;
  Tensor out = e_.W_at(n, h, f_.w[l], K);
  return wmemo_.emplace(key, std::move(out)).first->second;
}

Tensor FrameEval::loop_term(int i, int k, int h, int l, const Slots& K) {
  const int level = top_level(f_, K) + 1;
  Slots K2 = K;
  K2.push_back(Slot{SlotKind::Int, kInternalSlotId + 64 * level + l,
                    regulated_point(f_.w[l], level, e_.eps_window()), 0});
  const Tensor r = R(i, k + 1, h - 1, l, K2);
  if (r.is_zero()) return Tensor();
  const double sing = eps_singular_part(r, level);
  e_.note_eps(sing);
  return eps_constant(r, level);
}

Tensor FrameEval::R(int i, int k, int h, int l0, Slots K) {
  if (h < 0 || k < 0) return Tensor();
  if (k == 0 && h == 0) return Tensor();  // R_0^i(p^l) = delta_{i,l} with l != i
  sort_slots(K);
  const std::string key = memo_key(i, k, h, l0, K);
  if (auto it = rmemo_.find(key); it != rmemo_.end()) return it->second;
  const int n = f_.sheets();
  Tensor acc;
  for (int m = 0; m <= h; ++m)
    for (int j = 0; j <= k; ++j) {
      if ((m == 0 && j == 0) || (m == h && j == k)) continue;
      for (const auto& [J, rest] : splittings(K, j))
        for (int l = 0; l < n; ++l) {
          if (l == l0 || l == i) continue;
          const Tensor w = W_at(j + 1, m, l, J);
          if (w.is_zero()) continue;
          const Tensor r = R(i, k - j, h - m, l, rest);
          if (r.is_zero()) continue;
          acc += w.outer(r).scaled(f_.inv_xp[l]);
        }
    }
  if (h >= 1)
    for (int l = 0; l < n; ++l) {
      if (l == l0 || l == i) continue;
      const Tensor r = loop_term(i, k, h, l, K);
      if (!r.is_zero()) acc += r.scaled(f_.inv_xp[l]);
    }
  const Tensor w = W_at(k + 1, h, i, K);
  if (!w.is_zero()) acc += w.scaled(f_.inv_xp[i]);
  acc = acc.scaled(f_.inv_dy[i][l0]);
  return rmemo_.emplace(key, std::move(acc)).first->second;
}

Tensor FrameEval::integrand(int k, int h, const Slots& K) {
  Tensor acc;
  for (int i = 1; i < f_.sheets(); ++i) {
    for (int m = 0; m <= h; ++m)
      for (int j = 0; j <= k; ++j) {
        if ((m == 0 && j == 0) || (m == h && j == k)) continue;
        for (const auto& [J, rest] : splittings(K, j)) {
          const Tensor r = R(i, j, m, 0, J);
          if (r.is_zero()) continue;
          const Tensor w = W_at(k - j + 1, h - m, 0, rest);
          if (w.is_zero()) continue;
          acc += r.outer(w);
        }
      }
    if (h >= 1) acc += loop_term(i, k, h, 0, K);
  }
  return acc;
}

EngineBase::EngineBase(curve::SpectralCurve c, EvalConfig cfg) : c_(std::move(c)), cfg_(cfg) {
  if (cfg_.order != 0 && cfg_.order < 2) fail(ErrorCode::InvalidArgument, "series order must be at least 2");
  for (const auto& b : c_.branch()) centers_.push_back(b.a);
  if (c_.near_branch_point(cfg_.basepoint_o) >= 0)
    fail(ErrorCode::BranchPointArgument, "basepoint coincides with a branch point");
}

int EngineBase::order_for(int n, int h) const { return std::max(cfg_.order, default_order(n, h)) << retry_; }

int EngineBase::eps_window() const { return cfg_.eps_window << retry_; }

void EngineBase::reset(int retry) {
  retry_ = retry;
  tensors_.clear();
  frames_.clear();
  dropped_ = 0.0;
  eps_ = 0.0;
}

const Frame& EngineBase::frame(int branch, int order) {
  auto& slot = frames_[{branch, order}];
  if (!slot) slot = std::make_unique<Frame>(local_frame(c_, branch, order));
  return *slot;
}

Tensor EngineBase::W_at(int n, int h, const Scalar& head, const Slots& K) {
  if (n == 1 && h == 0) return Tensor();
  if (n == 2 && h == 0) return bergmann_tensor(centers_, head, K[0]);
  return contract_correlator(coefficients(n, h), centers_, centers_, max_pole(n, h), cfg_.basepoint_o, head, K);
}

const Tensor& EngineBase::coefficients(int n, int h) {
  if (n < 1 || h < 0 || (h == 0 && n <= 2))
    fail(ErrorCode::InvalidArgument, "no coefficient tensor for this correlator");
  if (auto it = tensors_.find({n, h}); it != tensors_.end()) return it->second;
  const int k = n - 1;
  const int M = max_pole(n, h);
  const int C = static_cast<int>(centers_.size());
  std::vector<int> labels(n), dims(n, C * M);
  for (int a = 0; a < n; ++a) labels[a] = a;
  dims[0] = 1 + C * M;
  Tensor out(labels, dims);
  Slots K;
  for (int a = 1; a <= k; ++a) K.push_back(Slot{SlotKind::Sym, a, Scalar(), C * M});
  for (int s = 0; s < C; ++s) {
    const Tensor F = integrand(frame(s, order_for(n, h)), k, h, K);
    note_dropped(accumulate_head(out, F, s, C, M));
  }
  return tensors_.emplace(std::make_pair(n, h), std::move(out)).first->second;
}

void EngineBase::check_points(const std::vector<cx>& points) const {
  for (size_t a = 0; a < points.size(); ++a) {
    if (const int s = c_.near_branch_point(points[a]); s >= 0)
      fail(ErrorCode::BranchPointArgument, "evaluation point at branch point " + std::to_string(s));
    if (points[a] == cfg_.basepoint_o) fail(ErrorCode::CoincidentPoints, "evaluation point equals the basepoint");
    for (size_t b = 0; b < a; ++b)
      if (points[a] == points[b]) fail(ErrorCode::CoincidentPoints, "coincident evaluation points");
  }
}

CorrelatorValue EngineBase::W(int h, const std::vector<cx>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 1 || h < 0) fail(ErrorCode::InvalidArgument, "correlator needs at least one point and h >= 0");
  check_points(points);
  if (h == 0 && n == 1) return CorrelatorValue{};
  if (h == 0 && n == 2) {
    CorrelatorValue v;
    v.value = curve::bergmann(c_, Scalar(points[0]), Scalar(points[1])).number();
    return v;
  }
  return with_retries(n, h, [&]() {
    Slots K;
    for (int a = 1; a < n; ++a) K.push_back(Slot{SlotKind::Num, a, Scalar(points[a]), 0});
    cx total{};
    for (size_t s = 0; s < centers_.size(); ++s) {
      const Frame& f = frame(static_cast<int>(s), order_for(n, h));
      const Tensor F = integrand(f, n - 1, h, K);
      if (F.rank() != 0) fail(ErrorCode::InvalidArgument, "numeric integrand carries tensor axes");
      if (F.is_zero()) continue;
      const Scalar dS = curve::third_kind(c_, Scalar(points[0]), f.w[0], cfg_.basepoint_o);
      total += (F.value() * dS).coeff(-1).number();
    }
    return total;
  });
}

CubicEngine::CubicEngine(curve::SpectralCurve c, EvalConfig cfg) : EngineBase(std::move(c), cfg) {}

Tensor CubicEngine::integrand(const Frame& f, int k, int h, const Slots& K) {
  FrameEval ev(*this, f);
  return ev.integrand(k, h, K);
}

CorrelatorValue CubicEngine::R(int i, int h, cx z, const std::vector<cx>& points) {
  const int k = static_cast<int>(points.size());
  if (i < 1 || i > curve().d2()) fail(ErrorCode::SheetIndexOutOfRange, "R is defined on sheets 1..d2");
  if (h < 0) fail(ErrorCode::InvalidArgument, "negative genus");
  std::vector<cx> all{z};
  all.insert(all.end(), points.begin(), points.end());
  check_points(all);
  if (k == 0 && h == 0) return CorrelatorValue{};
  return with_retries(k + 1, h, [&]() {
    const Frame f = global_frame(curve(), Scalar(z));
    FrameEval ev(*this, f);
    Slots K;
    for (int a = 0; a < k; ++a) K.push_back(Slot{SlotKind::Num, a + 1, Scalar(points[a]), 0});
    return ev.R(i, k, h, 0, K).value().constant_number();
  });
}

}  // namespace twomat::correlators
