// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "common/error.hpp"
#include "diagrams/diagram.hpp"
#include "effective/partitions.hpp"

namespace twomat::diagrams {

namespace {

using Kind = Node::Kind;

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t a = 0; a < v.size(); ++a) s += (a ? "," : "") + std::to_string(v[a]);
  return s;
}

char kind_letter(Kind k) {
  switch (k) {
    case Kind::Propagator: return 'P';
    case Kind::Residue: return 'W';
    case Kind::Bivalent: return 'B';
    case Kind::Colored: return 'C';
    case Kind::Multivalent: return 'V';
  }
  return '?';
}

NodePtr finish(Node n) {
  n.key = std::string(1, kind_letter(n.kind)) + std::to_string(n.genus) + '[' + join(n.args) + ']';
  if (n.loop()) n.key += '@' + std::to_string(n.internal);
  for (size_t b = 0; b < n.block_sheets.size(); ++b)
    n.key += '{' + std::to_string(n.block_sheets[b]) + ':' + join(n.block_tails[b]) + '}';
  n.key += '(';
  for (size_t c = 0; c < n.children.size(); ++c) n.key += (c ? "," : "") + n.children[c]->key;
  n.key += ')';
  return std::make_shared<const Node>(std::move(n));
}

std::vector<int> with(std::vector<int> v, int x) {
  v.push_back(x);
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) out.push_back(x);
  return out;
}

// Subsets of size j in lexicographic order of positions.
std::vector<std::vector<int>> subsets(const std::vector<int>& v, int j) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(size_t)> rec = [&](size_t from) {
    if (static_cast<int>(cur.size()) == j) {
      out.push_back(cur);
      return;
    }
    for (size_t a = from; a < v.size(); ++a) {
      cur.push_back(v[a]);
      rec(a + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

int label_base(int depth) { return kInternalLabel + 64 * depth; }

class Generator {
 public:
  Generator(Theory t, int d2) : theory_(t), d2_(d2) {}

  // Expansions of W_{n}^(h)(head, args), n = args.size() + 1.
  const std::vector<NodePtr>& W(const std::vector<int>& args, int h, int depth) {
    const std::string key = memo_key(args, h, depth);
    if (auto it = wmemo_.find(key); it != wmemo_.end()) return it->second;
    std::vector<NodePtr> out;
    const int n = static_cast<int>(args.size());
    if (h == 0 && n == 1) {
      Node p;
      p.kind = Kind::Propagator;
      p.args = args;
      out.push_back(finish(std::move(p)));
    } else if (!(h == 0 && n == 0)) {
      for (int m = 0; m <= h; ++m)
        for (int j = 0; j <= n; ++j) {
          if ((m == 0 && j == 0) || (m == h && j == n)) continue;
          for (const auto& J : subsets(args, j)) {
            const auto rest = minus(args, J);
            const auto heads = inner(J, m, depth + 1);
            const auto& tails = W(rest, h - m, depth + 1);
            for (const auto& a : heads)
              for (const auto& b : tails) out.push_back(residue(args, h, -1, {a, b}));
          }
        }
      if (h >= 1) {
        const int q = label_base(depth);
        for (const auto& a : inner(with(args, q), h - 1, depth + 1)) out.push_back(residue(args, h, q, {a}));
      }
    }
    return wmemo_.emplace(key, std::move(out)).first->second;
  }

 private:
  std::vector<NodePtr> inner(const std::vector<int>& args, int h, int depth) {
    return theory_ == Theory::Cubic ? R(args, h, depth) : V(args, h, depth);
  }

  static std::string memo_key(const std::vector<int>& args, int h, int depth) {
    return join(args) + '|' + std::to_string(h) + '|' + std::to_string(depth);
  }

  static NodePtr residue(const std::vector<int>& args, int h, int q, std::vector<NodePtr> children) {
    Node n;
    n.kind = Kind::Residue;
    n.genus = h;
    n.args = args;
    n.internal = q;
    n.children = std::move(children);
    return finish(std::move(n));
  }

  // Expansions of R_k^{i,(h)}(p^l0; args) with abstract sheets.
  const std::vector<NodePtr>& R(const std::vector<int>& args, int h, int depth) {
    const std::string key = memo_key(args, h, depth);
    if (auto it = rmemo_.find(key); it != rmemo_.end()) return it->second;
    std::vector<NodePtr> out;
    const int k = static_cast<int>(args.size());
    auto make = [&](Kind kind, int q, std::vector<NodePtr> children) {
      Node n;
      n.kind = kind;
      n.genus = h;
      n.args = args;
      n.internal = q;
      n.children = std::move(children);
      out.push_back(finish(std::move(n)));
    };
    if (!(k == 0 && h == 0)) {
      for (int m = 0; m <= h; ++m)
        for (int j = 0; j <= k; ++j) {
          if ((m == 0 && j == 0) || (m == h && j == k)) continue;
          for (const auto& J : subsets(args, j)) {
            const auto& ws = W(J, m, depth + 1);
            const auto& rs = R(minus(args, J), h - m, depth + 1);
            for (const auto& w : ws)
              for (const auto& r : rs) make(Kind::Colored, -1, {w, r});
          }
        }
      if (h >= 1) {
        const int q = label_base(depth);
        for (const auto& r : R(with(args, q), h - 1, depth + 1)) make(Kind::Colored, q, {r});
      }
      for (const auto& w : W(args, h, depth + 1)) make(Kind::Bivalent, -1, {w});
    }
    return rmemo_.emplace(key, std::move(out)).first->second;
  }

  struct BlockChoice {
    int sheets;
    int genus;
    std::vector<int> tails;
    NodePtr child;
    int index;       // position of child in its expansion list
    bool labeled;
  };

  // Multivalent vertices over `labels` of total genus `genus`: unordered products of
  // blocks W_{|S|+|L|}^(g) on pairwise distinct non-physical sheets.
  std::vector<NodePtr> V(const std::vector<int>& labels, int genus, int depth) {
    std::vector<NodePtr> out;
    std::vector<BlockChoice> blocks;
    const int base = label_base(depth);

    auto emit = [&]() {
      Node n;
      n.kind = Kind::Multivalent;
      n.genus = genus;
      n.args = labels;
      effective::PartitionTerm term;
      std::map<std::tuple<int, int, int>, int> repeats;
      for (const auto& b : blocks) {
        n.children.push_back(b.child);
        n.block_sheets.push_back(b.sheets);
        n.block_tails.push_back(b.tails);
        term.blocks.push_back(effective::Block{std::vector<int>(b.sheets, 0), {}, b.genus});
        if (!b.labeled) ++repeats[{b.sheets, b.genus, b.index}];
      }
      double aut = 1.0;
      for (const auto& [shape, count] : repeats) aut *= factorial(count);
      // Blocks are unordered here; divide the ordered multiplicity by the distinct orderings.
      n.symmetry = effective::omega_factor(term, effective::TermShape::Effective) * aut / factorial(term.r());
      out.push_back(finish(std::move(n)));
    };

    std::function<void(const std::vector<int>&, int, int, int, std::tuple<int, int, int>)> rec =
        [&](const std::vector<int>& rest, int g_left, int s_left, int t, std::tuple<int, int, int> last) {
          auto add = [&](const std::vector<int>& L, bool labeled) {
            for (int s = 1; s <= s_left; ++s)
              for (int g = 0; g + s - 1 <= g_left; ++g) {
                if (!labeled && s == 1 && g == 0) continue;
                std::vector<int> tails;
                for (int a = 0; a < s - 1; ++a) tails.push_back(base + 1 + t + a);
                std::vector<int> args = L;
                args.insert(args.end(), tails.begin(), tails.end());
                std::sort(args.begin(), args.end());
                const auto& children = W(args, g, depth + 1);
                for (size_t c = 0; c < children.size(); ++c) {
                  const std::tuple<int, int, int> shape{s, g, static_cast<int>(c)};
                  if (!labeled && shape < last) continue;
                  blocks.push_back(BlockChoice{s, g, tails, children[c], static_cast<int>(c), labeled});
                  rec(minus(rest, L), g_left - g - (s - 1), s_left - s, t + s - 1, labeled ? last : shape);
                  blocks.pop_back();
                }
              }
          };
          if (!rest.empty()) {
            const std::vector<int> others(rest.begin() + 1, rest.end());
            for (int j = 0; j <= static_cast<int>(others.size()); ++j)
              for (const auto& S : subsets(others, j)) {
                std::vector<int> L{rest.front()};
                L.insert(L.end(), S.begin(), S.end());
                add(L, true);
              }
            return;
          }
          if (g_left == 0 && !blocks.empty()) emit();
          add({}, false);
        };
    rec(labels, genus, d2_, 0, {0, 0, 0});
    return out;
  }

  Theory theory_;
  int d2_;
  std::map<std::string, std::vector<NodePtr>> wmemo_, rmemo_;
};

VertexKind vertex_kind(Kind k) {
  switch (k) {
    case Kind::Residue: return VertexKind::ResidueTrivalent;
    case Kind::Bivalent: return VertexKind::Bivalent;
    case Kind::Colored: return VertexKind::ColoredTrivalent;
    default: return VertexKind::Multivalent;
  }
}

// Flattens the term tree into vertices and typed edges.
class Flattener {
 public:
  explicit Flattener(Diagram& d) : d_(d) {}

  void run(const NodePtr& root) { visit(*root, -1, EdgeType::Arrowed, "q", "i", "0"); }

 private:
  void link(const Node& child, int parent, EdgeType type, const std::string& q, const std::string& i,
            const std::string& sheet) {
    if (child.kind == Kind::Propagator) {
      const int label = child.args.front();
      if (label < kInternalLabel)
        d_.edges.push_back(Edge{EdgeType::Plain, parent, -1, label});
      else
        d_.edges.push_back(Edge{EdgeType::Plain, parent, owner_.at(label), -1});
      return;
    }
    visit(child, parent, type, q, i, sheet);
  }

  // q: current residue point, i: sheet index summed at that residue, sheet: where this node sits.
  void visit(const Node& n, int parent, EdgeType type, std::string q, std::string i, const std::string& sheet) {
    const int id = static_cast<int>(d_.vertices.size());
    Vertex v;
    v.kind = vertex_kind(n.kind);
    v.genus = n.genus;
    d_.edges.push_back(Edge{type, parent, id, -1});
    d_.vertices.push_back(v);
    if (n.loop()) owner_[n.internal] = id;
    const std::string tag = std::to_string(id);
    switch (n.kind) {
      case Kind::Residue: {
        q = "q" + tag;
        d_.vertices[id].point = q;
        d_.vertices[id].valence = 3;
        if (d_.theory == Theory::Cubic) {
          i = "i" + tag;
          d_.vertices[id].summed = {i};
        }
        link(*n.children[0], id, EdgeType::ArrowedWaved, q, i, "0");
        if (n.children.size() > 1) link(*n.children[1], id, EdgeType::Arrowed, q, i, "0");
        break;
      }
      case Kind::Bivalent:
        d_.vertices[id].point = q + "^" + sheet;
        d_.vertices[id].valence = 2;
        link(*n.children[0], id, EdgeType::Arrowed, q, i, i);
        break;
      case Kind::Colored: {
        const std::string l = "l" + tag;
        d_.vertices[id].point = q + "^" + sheet;
        d_.vertices[id].summed = {l};
        d_.vertices[id].valence = 3;
        if (n.loop()) {
          link(*n.children[0], id, EdgeType::ArrowedWaved, q, i, l);
        } else {
          link(*n.children[0], id, EdgeType::Arrowed, q, i, l);
          link(*n.children[1], id, EdgeType::ArrowedWaved, q, i, l);
        }
        break;
      }
      case Kind::Multivalent: {
        d_.vertices[id].point = q;
        d_.vertices[id].r = static_cast<int>(n.children.size());
        d_.vertices[id].valence = d_.vertices[id].r + 2;
        for (size_t b = 0; b < n.children.size(); ++b) {
          const std::string j = "j" + tag + "_" + std::to_string(b);
          d_.vertices[id].summed.push_back(j);
          for (int t : n.block_tails[b]) owner_[t] = id;
        }
        for (size_t b = 0; b < n.children.size(); ++b)
          link(*n.children[b], id, EdgeType::Arrowed, q, i, d_.vertices[id].summed[b]);
        break;
      }
      case Kind::Propagator: break;
    }
  }

  Diagram& d_;
  std::map<int, int> owner_;
};

double symmetry_of(const Node& n) {
  double s = n.symmetry;
  for (const auto& c : n.children) s *= symmetry_of(*c);
  return s;
}

}  // namespace

int Diagram::trivalent() const {
  return static_cast<int>(std::count_if(vertices.begin(), vertices.end(), [](const Vertex& v) {
    return v.kind == VertexKind::ResidueTrivalent || v.kind == VertexKind::ColoredTrivalent;
  }));
}

int Diagram::loop_closures() const {
  return static_cast<int>(
      std::count_if(edges.begin(), edges.end(), [](const Edge& e) { return e.type == EdgeType::Plain && e.to >= 0; }));
}

std::vector<Diagram> enumerate(int k, int h, Theory theory, int d2) {
  if (k < 0 || h < 0 || d2 < 1) fail(ErrorCode::InvalidArgument, "diagrams need k >= 0, h >= 0 and d2 >= 1");
  std::vector<Diagram> out;
  if (h == 0 && k <= 1) return out;
  Generator gen(theory, d2);
  std::vector<int> leaves(k);
  for (int a = 0; a < k; ++a) leaves[a] = a;
  for (const auto& root : gen.W(leaves, h, 0)) {
    Diagram d;
    d.theory = theory;
    d.k = k;
    d.h = h;
    d.tree = root;
    d.symmetry = symmetry_of(*root);
    Flattener(d).run(root);
    out.push_back(std::move(d));
  }
  return out;
}

std::size_t count_uncolored(const std::vector<Diagram>& ds) {
  return static_cast<std::size_t>(std::count_if(ds.begin(), ds.end(), [](const Diagram& d) {
    return std::none_of(d.vertices.begin(), d.vertices.end(),
                        [](const Vertex& v) { return v.kind == VertexKind::ColoredTrivalent; });
  }));
}

}  // namespace twomat::diagrams
