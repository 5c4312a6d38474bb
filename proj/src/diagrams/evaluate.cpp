// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>

#include "common/error.hpp"
#include "diagrams/diagram.hpp"

namespace twomat::diagrams {

namespace {

using algebra::Scalar;
using algebra::Tensor;
using correlators::Frame;
using correlators::Slot;
using correlators::SlotKind;
using correlators::Slots;
using Kind = Node::Kind;
using Env = std::map<int, Slot>;

// Sums the terms of a set of diagrams through the residue machinery of the engines: each
// residue vertex below the root gets its own principal-part coefficient tensor.
class DiagramEngine : public correlators::EngineBase {
 public:
  DiagramEngine(curve::SpectralCurve c, EvalConfig cfg, Theory theory, std::vector<NodePtr> roots)
      : EngineBase(std::move(c), cfg), theory_(theory), roots_(std::move(roots)) {}

  CorrelatorValue value(int h, const std::vector<cx>& points) { return W(h, points); }

 protected:
  Tensor integrand(const Frame& f, int k, int, const Slots& K) override {
    Env env;
    for (int a = 0; a < k; ++a) env[K[a].id - 1] = K[a];
    InFrame ev(*this, f);
    Tensor acc;
    for (const auto& root : roots_) acc += ev.integrand(*root, env);
    return acc;
  }

 private:
  class InFrame {
   public:
    InFrame(DiagramEngine& e, const Frame& f) : e_(e), f_(f) {}

    Tensor integrand(const Node& n, const Env& env) {
      Tensor acc;
      if (e_.theory_ == Theory::Cubic) {
        for (int i = 1; i < f_.sheets(); ++i) {
          if (n.loop()) {
            acc += loop(*n.children[0], n, i, 0, env);
            continue;
          }
          const Tensor r = R(*n.children[0], i, 0, env);
          if (r.is_zero()) continue;
          const Tensor w = W(*n.children[1], f_.w[0], env);
          if (!w.is_zero()) acc += r.outer(w);
        }
        return acc;
      }
      if (n.loop()) {
        Env env2 = env;
        env2[n.internal] = Slot{SlotKind::Num, correlators::kInternalSlotId + n.internal, f_.w[0], 0};
        acc = vertex(*n.children[0], env2);
      } else {
        const Tensor v = vertex(*n.children[0], env);
        if (!v.is_zero()) {
          const Tensor w = W(*n.children[1], f_.w[0], env);
          if (!w.is_zero()) acc = v.outer(w);
        }
      }
      return acc.scaled(Scalar(-1.0));
    }

   private:
    Slots slots_of(const std::vector<int>& labels, const Env& env) const {
      Slots s;
      for (int a : labels) s.push_back(env.at(a));
      return s;
    }

    std::string memo_key(const Node& n, int i, int l0, const Env& env) const {
      return std::to_string(reinterpret_cast<std::uintptr_t>(&n)) + ':' + std::to_string(i) + ':' +
             std::to_string(l0) + '|' + correlators::slots_key(slots_of(n.args, env));
    }

    Tensor W(const Node& n, const Scalar& head, const Env& env) {
      if (n.kind == Kind::Propagator) return correlators::bergmann_tensor(e_.centers(), head, env.at(n.args[0]));
      return e_.contract(n, head, slots_of(n.args, env));
    }

    // W at sheet l of the current residue point, memoized.
    Tensor W_at(const Node& n, int l, const Env& env) {
      const std::string key = memo_key(n, -1, l, env);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
      return memo_.emplace(key, W(n, f_.w[l], env)).first->second;
    }

    // R_k^{i,(h)}(p^l0; args) restricted to the term tree below n.
    Tensor R(const Node& n, int i, int l0, const Env& env) {
      const std::string key = memo_key(n, i, l0, env);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
      Tensor acc;
      if (n.kind == Kind::Bivalent) {
        const Tensor w = W_at(*n.children[0], i, env);
        if (!w.is_zero()) acc = w.scaled(f_.inv_xp[i]);
      } else {
        for (int l = 0; l < f_.sheets(); ++l) {
          if (l == l0 || l == i) continue;
          if (n.loop()) {
            const Tensor r = loop(*n.children[0], n, i, l, env);
            if (!r.is_zero()) acc += r.scaled(f_.inv_xp[l]);
            continue;
          }
          const Tensor w = W_at(*n.children[0], l, env);
          if (w.is_zero()) continue;
          const Tensor r = R(*n.children[1], i, l, env);
          if (!r.is_zero()) acc += w.outer(r).scaled(f_.inv_xp[l]);
        }
      }
      acc = acc.scaled(f_.inv_dy[i][l0]);
      return memo_.emplace(key, std::move(acc)).first->second;
    }

    // R below a loop insertion at sheet l, regulated by shifting the coincident argument.
    Tensor loop(const Node& child, const Node& owner, int i, int l, const Env& env) {
      const int level = correlators::top_level(f_, slots_of(owner.args, env)) + 1;
      Env env2 = env;
      env2[owner.internal] = Slot{SlotKind::Int, correlators::kInternalSlotId + 64 * level + l,
                                  correlators::regulated_point(f_.w[l], level, e_.eps_window()), 0};
      const Tensor r = R(child, i, l, env2);
      if (r.is_zero()) return Tensor();
      e_.note_eps(correlators::eps_singular_part(r, level));
      return correlators::eps_constant(r, level);
    }

    // Multivalent vertex: ordered sheet assignments divided by the vertex symmetry.
    Tensor vertex(const Node& n, const Env& env) {
      int total = 0;
      for (int s : n.block_sheets) total += s;
      const int d2 = f_.sheets() - 1;
      Tensor acc;
      std::vector<int> tuple;
      std::vector<bool> used(f_.sheets(), false);
      std::function<void()> rec = [&]() {
        if (static_cast<int>(tuple.size()) == total) {
          Tensor prod = Tensor::scalar(Scalar(1.0));
          size_t pos = 0;
          for (size_t b = 0; b < n.children.size(); ++b) {
            Env env2 = env;
            const int head = tuple[pos];
            Scalar kernel = f_.inv_xp[head] * f_.inv_dy[0][head];
            for (size_t t = 0; t < n.block_tails[b].size(); ++t) {
              const int j = tuple[pos + 1 + t];
              env2[n.block_tails[b][t]] = Slot{SlotKind::Num, correlators::kInternalSlotId + 1 + j, f_.w[j], 0};
              kernel = kernel * f_.inv_xp[j] * f_.inv_dy[0][j];
            }
            pos += n.block_sheets[b];
            const Tensor w = W(*n.children[b], f_.w[head], env2);
            if (w.is_zero()) return;
            prod = prod.outer(w.scaled(kernel));
          }
          acc += prod;
          return;
        }
        for (int j = 1; j <= d2; ++j) {
          if (used[j]) continue;
          used[j] = true;
          tuple.push_back(j);
          rec();
          tuple.pop_back();
          used[j] = false;
        }
      };
      rec();
      return acc.scaled(Scalar(1.0 / n.symmetry));
    }

    DiagramEngine& e_;
    const Frame& f_;
    std::unordered_map<std::string, Tensor> memo_;
  };

  // Coefficients of the residue vertex n, axes in the order of n.args.
  const Tensor& coefficients(const Node& n) {
    const int N = static_cast<int>(n.args.size()) + 1;
    const int order = order_for(N, n.genus);
    const std::string key = n.key + '#' + std::to_string(order) + '#' + std::to_string(eps_window());
    if (auto it = coeffs_.find(key); it != coeffs_.end()) return it->second;
    const int M = correlators::max_pole(N, n.genus);
    const int C = static_cast<int>(centers().size());
    std::vector<int> labels(N), dims(N, C * M);
    for (int a = 0; a < N; ++a) labels[a] = a;
    dims[0] = 1 + C * M;
    Tensor out(labels, dims);
    Env env;
    for (int a = 1; a < N; ++a) env[n.args[a - 1]] = Slot{SlotKind::Sym, a, Scalar(), C * M};
    for (int s = 0; s < C; ++s) {
      InFrame ev(*this, frame(s, order));
      note_dropped(correlators::accumulate_head(out, ev.integrand(n, env), s, C, M));
    }
    return coeffs_.emplace(key, std::move(out)).first->second;
  }

  // Contracts the coefficients of n axis by axis; Sym slots rename their axes.
  Tensor contract(const Node& n, const Scalar& head, const Slots& tails) {
    const int N = static_cast<int>(n.args.size()) + 1;
    const int M = correlators::max_pole(N, n.genus);
    Tensor t = coefficients(n);
    std::vector<int> ids;
    for (int a = N - 1; a >= 1; --a) {
      const Slot& s = tails[a - 1];
      if (s.kind == SlotKind::Sym)
        ids.insert(ids.begin(), s.id);
      else
        t = t.contract(a, correlators::tail_vector(centers(), M, s.value));
    }
    t = t.contract(0, correlators::head_vector(centers(), M, config().basepoint_o, head));
    if (!std::is_sorted(ids.begin(), ids.end())) fail(ErrorCode::InvalidArgument, "symbolic slots out of order");
    return t.relabeled(ids);
  }

  Theory theory_;
  std::vector<NodePtr> roots_;
  std::unordered_map<std::string, Tensor> coeffs_;
};

CorrelatorValue run(const curve::SpectralCurve& c, Theory theory, int k, int h, std::vector<NodePtr> roots,
                    const std::vector<cx>& points, const EvalConfig& cfg) {
  if (static_cast<int>(points.size()) != k + 1) fail(ErrorCode::InvalidArgument, "diagram needs k + 1 points");
  DiagramEngine e(c, cfg, theory, std::move(roots));
  return e.value(h, points);
}

}  // namespace

CorrelatorValue evaluate(const curve::SpectralCurve& c, const Diagram& d, const std::vector<cx>& points,
                         const EvalConfig& cfg) {
  return run(c, d.theory, d.k, d.h, {d.tree}, points, cfg);
}

CorrelatorValue diagram_sum(const curve::SpectralCurve& c, int k, int h, Theory theory,
                            const std::vector<cx>& points, const EvalConfig& cfg) {
  std::vector<NodePtr> roots;
  for (const auto& d : enumerate(k, h, theory, c.d2())) roots.push_back(d.tree);
  if (roots.empty() && static_cast<int>(points.size()) == k + 1) {
    DiagramEngine e(c, cfg, theory, {});
    return e.value(h, points);  // the base cases W_1^(0) and W_2^(0)
  }
  return run(c, theory, k, h, std::move(roots), points, cfg);
}

}  // namespace twomat::diagrams
