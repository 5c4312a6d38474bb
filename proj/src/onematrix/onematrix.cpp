// SPDX-License-Identifier: Apache-2.0
#include "onematrix/onematrix.hpp"

#include <algorithm>

namespace twomat::onematrix {

namespace {

int pole_bound(int n, int h) { return std::max(6 * h + 2 * n - 4, 1); }

// Removes the constant term of a series that vanishes exactly at the branch point.
Scalar drop_constant(const Scalar& s) {
  const auto& ls = s.series();
  std::vector<Scalar> c;
  for (int e = 0; e <= ls.top(); ++e) c.push_back(e == 0 ? Scalar() : ls.at(e));
  return Scalar::from_series(s.level(), algebra::LaurentSeries(ls.base, 0, std::move(c)));
}

bool same_point(const Scalar& z, cx a) { return !z.is_number() && z.constant_number() == a; }

}  // namespace

namespace {

std::size_t count_terms(int k, int h, std::map<std::pair<int, int>, std::size_t>& memo) {
  if (h == 0 && k <= 1) return k == 1 ? 1 : 0;
  if (auto it = memo.find({k, h}); it != memo.end()) return it->second;
  std::size_t total = h >= 1 ? count_terms(k + 1, h - 1, memo) : 0;
  for (int m = 0; m <= h; ++m)
    for (int j = 0; j <= k; ++j) {
      if ((m == 0 && j == 0) || (m == h && j == k)) continue;
      std::size_t binom = 1;
      for (int a = 0; a < j; ++a) binom = binom * (k - a) / (a + 1);
      total += binom * count_terms(j, m, memo) * count_terms(k - j, h - m, memo);
    }
  return memo.emplace(std::make_pair(k, h), total).first->second;
}

}  // namespace

std::size_t count_terms(int k, int h) {
  if (k < 0 || h < 0) fail(ErrorCode::InvalidArgument, "negative diagram size");
  std::map<std::pair<int, int>, std::size_t> memo;
  return count_terms(k, h, memo);
}

cx involution(const curve::SpectralCurve& c, cx z) {
  if (c.d2() != 1) fail(ErrorCode::NotHyperelliptic, "the curve has more than two sheets");
  return curve::sheets_global(c, Scalar(z))[1].number();
}

bool is_hyperelliptic(const curve::SpectralCurve& c, double tol) {
  if (c.d2() != 1) return false;
  const cx probes[] = {{0.37, 1.21}, {-1.73, 0.44}, {2.9, -0.83}};
  for (cx z : probes) {
    const cx zb = involution(c, z);
    const cx y = c.y()(Scalar(z)).number();
    const cx yb = c.y()(Scalar(zb)).number();
    if (std::abs(y + yb) > tol * (1.0 + std::abs(y))) return false;
  }
  return true;
}

OneMatrixEngine::OneMatrixEngine(curve::SpectralCurve c, Options opt, bool require_hyperelliptic)
    : c_(std::move(c)), opt_(opt) {
  if (require_hyperelliptic && !is_hyperelliptic(c_, opt_.tol))
    fail(ErrorCode::NotHyperelliptic, "the one-matrix recursion needs y(zbar) = -y(z) on a two-sheeted curve");
  for (const auto& b : c_.branch()) a_.push_back(b.a);
}

int OneMatrixEngine::order_for(int n, int h) const { return std::max(opt_.order, 6 * h + 2 * n + 8) << retry_; }

const OneMatrixEngine::Local& OneMatrixEngine::local(int s, int order) {
  auto it = locals_.find({s, order});
  if (it != locals_.end()) return it->second;
  const curve::SheetSystem sys = curve::sheets_local(c_, s, order);
  Local L;
  L.q = sys.sheets[0];
  L.qbar = sys.sheets[1];
  L.dqbar = L.qbar.derivative();
  // Correlators of the matrix model carry the opposite sign of the invariants of y dx.
  const Scalar dy = drop_constant(sys.yval[1] - sys.yval[0]);
  L.kernel = L.dqbar / (Scalar(2.0) * dy * sys.xprime[0]);
  return locals_.emplace(std::make_pair(s, order), std::move(L)).first->second;
}

std::vector<Scalar> OneMatrixEngine::powers(const Scalar& z, int s, int M) const {
  const Scalar d = z - Scalar(a_[s]);
  if (d.is_number() && d.number() == cx{}) fail(ErrorCode::CoincidentPoints, "argument at a branch point");
  std::vector<Scalar> p(static_cast<size_t>(M));
  const Scalar inv = d.inverse();
  p[0] = inv;
  for (int m = 1; m < M; ++m) p[m] = p[m - 1] * inv;
  return p;
}

Tensor OneMatrixEngine::value_at(int n, int h, const Scalar& head, const std::vector<Arg>& tails, int pole_dim) {
  const int S = static_cast<int>(a_.size());
  if (n == 1 && h == 0) return Tensor();
  if (n == 2 && h == 0) {
    const Arg& q = tails[0];
    if (!q.symbolic) {
      const Scalar d = head - q.value;
      return Tensor::scalar((d * d).inverse());
    }
    // 1/(q - head)^2 expanded at the branch point the head tends to.
    Tensor t({q.label}, {pole_dim});
    bool any = false;
    for (int s = 0; s < S; ++s) {
      if (!same_point(head, a_[s])) continue;
      const Scalar g = drop_constant(head - Scalar(a_[s]));
      Scalar gp(1.0);
      for (int m = 2; m <= pole_dim / S; ++m) {
        t[(m - 1) * S + s] = gp * Scalar(double(m - 1));
        gp = gp * g;
      }
      any = true;
    }
    return any ? t : Tensor();
  }
  const int M = pole_bound(n, h);
  auto vec = [&](const Scalar& z) {
    std::vector<Scalar> v(static_cast<size_t>(S * M));
    for (int s = 0; s < S; ++s) {
      const auto p = powers(z, s, M);
      for (int m = 1; m <= M; ++m) v[(m - 1) * S + s] = p[m - 1];
    }
    return v;
  };
  std::vector<const Arg*> sym, other;
  for (const auto& q : tails) (q.symbolic ? sym : other).push_back(&q);
  std::sort(sym.begin(), sym.end(), [](const Arg* x, const Arg* y) { return x->label < y->label; });
  Tensor t = coeffs(n, h);
  int axis = static_cast<int>(sym.size()) + 1;
  for (const Arg* q : other) t = t.contract(axis++, vec(q->value));
  t = t.contract(0, vec(head));
  std::vector<int> labels;
  for (const Arg* q : sym) labels.push_back(q->label);
  return t.relabeled(labels);
}

Tensor OneMatrixEngine::bracket(const Local& L, int k, int h, const std::vector<Arg>& K, int pole_dim) {
  Tensor acc;
  if (h >= 1) {
    std::vector<Arg> tails{Arg{false, -1, L.qbar}};
    tails.insert(tails.end(), K.begin(), K.end());
    acc += value_at(k + 2, h - 1, L.q, tails, pole_dim);
  }
  const size_t subsets = size_t{1} << K.size();
  for (int m = 0; m <= h; ++m)
    for (size_t mask = 0; mask < subsets; ++mask) {
      std::vector<Arg> I, J;
      for (size_t b = 0; b < K.size(); ++b) (mask & (size_t{1} << b) ? I : J).push_back(K[b]);
      if ((m == 0 && I.empty()) || (m == h && J.empty())) continue;
      const Tensor u = value_at(static_cast<int>(I.size()) + 1, m, L.q, I, pole_dim);
      if (u.is_zero()) continue;
      const Tensor v = value_at(static_cast<int>(J.size()) + 1, h - m, L.qbar, J, pole_dim);
      if (v.is_zero()) continue;
      acc += u.outer(v);
    }
  return acc.scaled(L.kernel);
}

const Tensor& OneMatrixEngine::coeffs(int n, int h) {
  if (auto it = coeffs_.find({n, h}); it != coeffs_.end()) return it->second;
  const int S = static_cast<int>(a_.size());
  const int M = pole_bound(n, h);
  const int D = S * M;
  std::vector<int> labels(n), dims(n, D);
  for (int a = 0; a < n; ++a) labels[a] = a;
  Tensor out(labels, dims);
  std::vector<Arg> K;
  for (int a = 1; a < n; ++a) K.push_back(Arg{true, a, Scalar()});
  size_t inner = 1;
  for (int a = 1; a < n; ++a) inner *= D;
  for (int s = 0; s < S; ++s) {
    const Local& L = local(s, order_for(n, h));
    const Tensor F = bracket(L, n - 1, h, K, D);
    if (F.is_zero()) continue;
    // (p - a - g)^{-1} = sum_m g^{m-1} (p - a)^{-m} for g = t and g = qbar - a.
    const Scalar g1 = drop_constant(L.qbar - Scalar(a_[s]));
    std::vector<Scalar> weight(static_cast<size_t>(M));
    Scalar tp(1.0), gp(1.0);
    const Scalar t = L.q - Scalar(a_[s]);
    for (int m = 1; m <= M; ++m) {
      weight[m - 1] = tp - gp;
      tp = tp * t;
      gp = gp * g1;
    }
    const int r = F.rank();
    std::vector<int> idx(r, 0);
    for (size_t flat = 0; flat < F.size(); ++flat) {
      if (!F[flat].is_exact_zero()) {
        size_t off = 0;
        for (int a = 0; a < r; ++a) off = off * D + idx[a];
        for (int m = 1; m <= M; ++m) {
          const Scalar prod = F[flat] * weight[m - 1];
          if (prod.is_number()) continue;
          const Scalar c = prod.coeff(-1);
          const size_t hidx = static_cast<size_t>((m - 1) * S + s);
          out[hidx * inner + off] = out[hidx * inner + off] + c;
        }
      }
      for (int a = r - 1; a >= 0; --a) {
        if (++idx[a] < F.dims()[a]) break;
        idx[a] = 0;
      }
    }
  }
  return coeffs_.emplace(std::make_pair(n, h), std::move(out)).first->second;
}

Value OneMatrixEngine::W(int h, const std::vector<cx>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 1 || h < 0) fail(ErrorCode::InvalidArgument, "correlator needs at least one point and h >= 0");
  for (size_t a = 0; a < points.size(); ++a) {
    if (c_.near_branch_point(points[a]) >= 0) fail(ErrorCode::BranchPointArgument, "evaluation point at a branch point");
    for (size_t b = 0; b < a; ++b)
      if (points[a] == points[b]) fail(ErrorCode::CoincidentPoints, "coincident evaluation points");
  }
  Value v;
  if (h == 0 && n == 1) return v;
  if (h == 0 && n == 2) {
    v.value = 1.0 / ((points[0] - points[1]) * (points[0] - points[1]));
    return v;
  }
  for (int r = 0; r <= opt_.max_retries; ++r) {
    retry_ = r;
    coeffs_.clear();
    locals_.clear();
    try {
      std::vector<Arg> K;
      for (int a = 1; a < n; ++a) K.push_back(Arg{false, a, Scalar(points[a])});
      cx total{};
      const Scalar p(points[0]);
      for (size_t s = 0; s < a_.size(); ++s) {
        const Local& L = local(static_cast<int>(s), order_for(n, h));
        const Tensor F = bracket(L, n - 1, h, K, 0);
        if (F.is_zero()) continue;
        const Scalar dS = (p - L.q).inverse() - (p - L.qbar).inverse();
        const Scalar integrand = F.value() * dS;
        if (!integrand.is_number()) total += integrand.coeff(-1).number();
      }
      v.value = total;
      v.order_used = order_for(n, h);
      v.retries = r;
      return v;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::WindowMiss) throw;
    }
  }
  fail(ErrorCode::TruncationExhausted, "series windows too small for the one-matrix recursion");
}

}  // namespace twomat::onematrix
