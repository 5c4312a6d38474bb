// SPDX-License-Identifier: Apache-2.0
#include "correlators/context.hpp"

#include <algorithm>

namespace twomat::correlators {

namespace {

Scalar zero_constant(const Scalar& s) {
  if (s.is_number()) return Scalar();
  const auto& ls = s.series();
  std::vector<Scalar> c;
  for (int e = std::min(ls.lowest, 0); e <= ls.top(); ++e) c.push_back(e == 0 ? Scalar() : ls.at(e));
  return Scalar::from_series(s.level(), algebra::LaurentSeries(ls.base, std::min(ls.lowest, 0), std::move(c)));
}

void fill_inverses(Frame& f, const std::vector<bool>& ramified) {
  const int n = f.sheets();
  f.inv_xp.resize(n);
  f.inv_dy.assign(n, std::vector<Scalar>(n));
  for (int l = 0; l < n; ++l) f.inv_xp[l] = f.xp[l].inverse();
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      if (i == l) continue;
      Scalar d = f.y[i] - f.y[l];
      // The ramified pair shares its value at the branch point exactly.
      if (ramified[i] && ramified[l]) d = zero_constant(d);
      f.inv_dy[i][l] = d.inverse();
    }
}

// Powers (q - c)^{-m}, m = 1..M.
std::vector<Scalar> inverse_powers(const Scalar& q, cx c, int M) {
  const Scalar d = q - Scalar(c);
  if (d.is_exact_zero()) fail(ErrorCode::CoincidentPoints, "point coincides with an expansion center");
  std::vector<Scalar> out(static_cast<size_t>(M));
  if (M == 0) return out;
  const Scalar inv = d.inverse();
  out[0] = inv;
  for (int m = 1; m < M; ++m) out[m] = out[m - 1] * inv;
  return out;
}

}  // namespace

std::string slots_key(const Slots& s) {
  std::string k;
  for (const auto& x : s) {
    k += x.kind == SlotKind::Sym ? 's' : x.kind == SlotKind::Num ? 'n' : 'i';
    k += std::to_string(x.id);
    k += ',';
  }
  return k;
}

void sort_slots(Slots& s) {
  std::sort(s.begin(), s.end(), [](const Slot& a, const Slot& b) {
    return a.kind != b.kind ? a.kind < b.kind : a.id < b.id;
  });
}

std::vector<std::pair<Slots, Slots>> splittings(const Slots& s, int j) {
  std::vector<std::pair<Slots, Slots>> out;
  const int n = static_cast<int>(s.size());
  if (j < 0 || j > n) return out;
  std::vector<int> pick(j);
  for (int a = 0; a < j; ++a) pick[a] = a;
  while (true) {
    Slots in, rest;
    int p = 0;
    for (int a = 0; a < n; ++a) {
      if (p < j && pick[p] == a) {
        in.push_back(s[a]);
        ++p;
      } else {
        rest.push_back(s[a]);
      }
    }
    out.emplace_back(std::move(in), std::move(rest));
    int a = j - 1;
    while (a >= 0 && pick[a] == n - j + a) --a;
    if (a < 0) break;
    ++pick[a];
    for (int b = a + 1; b < j; ++b) pick[b] = pick[b - 1] + 1;
  }
  return out;
}

std::vector<Scalar> tail_vector(const std::vector<cx>& centers, int max_pole, const Scalar& q) {
  const int C = static_cast<int>(centers.size());
  std::vector<Scalar> v(static_cast<size_t>(C * max_pole));
  for (int c = 0; c < C; ++c) {
    const auto p = inverse_powers(q, centers[c], max_pole);
    for (int m = 1; m <= max_pole; ++m) v[(m - 1) * C + c] = p[m - 1];
  }
  return v;
}

std::vector<Scalar> head_vector(const std::vector<cx>& centers, int max_pole, cx o, const Scalar& q) {
  std::vector<Scalar> v{Scalar()};
  const Scalar d = q - Scalar(o);
  if (d.is_exact_zero()) fail(ErrorCode::CoincidentPoints, "point coincides with the basepoint");
  v[0] = d.inverse();
  const auto t = tail_vector(centers, max_pole, q);
  v.insert(v.end(), t.begin(), t.end());
  return v;
}

std::vector<Scalar> bergmann_vector(const std::vector<cx>& centers, int max_pole, const Scalar& w) {
  const int C = static_cast<int>(centers.size());
  std::vector<Scalar> v(static_cast<size_t>(C * max_pole));
  if (w.is_number()) return v;
  const cx w0 = w.constant_number();
  for (int c = 0; c < C; ++c) {
    if (w0 != centers[c]) continue;
    const Scalar g = zero_constant(w - Scalar(centers[c]));
    Scalar gp(1.0);
    for (int m = 2; m <= max_pole; ++m) {
      v[(m - 1) * C + c] = gp * Scalar(double(m - 1));
      gp = gp * g;
    }
  }
  return v;
}

Frame local_frame(const curve::SpectralCurve& c, int branch, int order) {
  const curve::SheetSystem sys = curve::sheets_local(c, branch, order);
  Frame f;
  f.level = 1;
  f.branch = branch;
  f.w = sys.sheets;
  f.xp = sys.xprime;
  f.y = sys.yval;
  std::vector<bool> ram(f.w.size(), false);
  ram[0] = ram[1] = true;
  fill_inverses(f, ram);
  return f;
}

Frame global_frame(const curve::SpectralCurve& c, const Scalar& z) {
  Frame f;
  f.level = z.level();
  f.w = curve::sheets_global(c, z);
  for (const auto& w : f.w) {
    f.xp.push_back(c.dx()(w));
    f.y.push_back(c.y()(w));
  }
  fill_inverses(f, std::vector<bool>(f.w.size(), false));
  return f;
}

int top_level(const Frame& f, const Slots& s) {
  int L = f.level;
  for (const auto& x : s)
    if (x.kind != SlotKind::Sym) L = std::max(L, x.value.level());
  return L;
}

Scalar regulated_point(const Scalar& w, int level, int window) {
  return Scalar::variable(level, w, window, 0.0);
}

Tensor eps_constant(const Tensor& t, int level) {
  return t.mapped([level](const Scalar& s) { return s.coeff_at(level, 0); });
}

double eps_singular_part(const Tensor& t, int level) {
  double m = 0.0;
  for (size_t i = 0; i < t.size(); ++i) {
    const Scalar& s = t[i];
    if (s.level() != level) continue;
    const auto& ls = s.series();
    for (int e = ls.lowest; e < 0 && e <= ls.top(); ++e) m = std::max(m, ls.at(e).max_abs());
  }
  return m;
}

Tensor contract_correlator(const Tensor& coeffs, const std::vector<cx>& head_centers,
                           const std::vector<cx>& tail_centers, int max_pole, cx o, const Scalar& head,
                           const Slots& tails) {
  const int n_tail = coeffs.rank() - 1;
  if (n_tail != static_cast<int>(tails.size())) fail(ErrorCode::InvalidArgument, "slot count mismatch");
  std::vector<const Slot*> sym, num, ser;
  for (const auto& s : tails) {
    if (s.kind == SlotKind::Sym)
      sym.push_back(&s);
    else if (s.value.is_number())
      num.push_back(&s);
    else
      ser.push_back(&s);
  }
  std::sort(sym.begin(), sym.end(), [](const Slot* a, const Slot* b) { return a->id < b->id; });
  // Axes 1..|sym| stay symbolic; the rest are contracted, numeric ones first.
  Tensor t = coeffs;
  int axis = static_cast<int>(sym.size()) + 1;
  for (const Slot* s : num) t = t.contract(axis++, tail_vector(tail_centers, max_pole, s->value));
  for (const Slot* s : ser) t = t.contract(axis++, tail_vector(tail_centers, max_pole, s->value));
  t = t.contract(0, head_vector(head_centers, max_pole, o, head));
  std::vector<int> ids;
  for (const Slot* s : sym) ids.push_back(s->id);
  return t.relabeled(ids);
}

Tensor bergmann_tensor(const std::vector<cx>& centers, const Scalar& head, const Slot& tail) {
  if (tail.kind == SlotKind::Sym) {
    const int C = static_cast<int>(centers.size());
    const auto v = bergmann_vector(centers, tail.dim / C, head);
    Tensor t({tail.id}, {tail.dim});
    bool any = false;
    for (size_t i = 0; i < v.size(); ++i) {
      t[i] = v[i];
      any = any || !v[i].is_exact_zero();
    }
    return any ? t : Tensor();
  }
  const Scalar d = head - tail.value;
  if (d.is_number() && d.number() == cx{}) fail(ErrorCode::CoincidentPoints, "Bergmann kernel on the diagonal");
  return Tensor::scalar((d * d).inverse());
}

double accumulate_head(Tensor& out, const Tensor& F, int branch, int branch_count, int max_pole) {
  if (F.is_zero()) return 0.0;
  const int r = F.rank();
  if (out.rank() != r + 1) fail(ErrorCode::InvalidArgument, "head accumulator rank mismatch");
  for (int a = 0; a < r; ++a)
    if (out.labels()[a + 1] != F.labels()[a] || out.dims()[a + 1] < F.dims()[a])
      fail(ErrorCode::InvalidArgument, "head accumulator axes do not cover the integrand");
  size_t inner = 1;
  for (int a = 1; a <= r; ++a) inner *= out.dims()[a];
  double dropped = 0.0;
  std::vector<int> idx(r, 0);
  for (size_t flat = 0; flat < F.size(); ++flat) {
    const Scalar& f = F[flat];
    if (!f.is_exact_zero() && !f.is_number()) {
      size_t off = 0;
      for (int a = 0; a < r; ++a) off = off * out.dims()[a + 1] + idx[a];
      const auto& ls = f.series();
      for (int m = 1; m <= max_pole; ++m) {
        const Scalar c = f.coeff(-m);
        if (c.is_exact_zero()) continue;
        const size_t h = 1 + static_cast<size_t>((m - 1) * branch_count + branch);
        out[h * inner + off] = out[h * inner + off] + c;
        if (m == 1) out[off] = out[off] - c;
      }
      for (int e = ls.lowest; e < -max_pole; ++e) dropped = std::max(dropped, ls.at(e).max_abs());
    }
    for (int a = r - 1; a >= 0; --a) {
      if (++idx[a] < F.dims()[a]) break;
      idx[a] = 0;
    }
  }
  return dropped;
}

}  // namespace twomat::correlators
