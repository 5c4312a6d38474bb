// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "correlators/engine.hpp"
#include "curve/curve.hpp"

namespace twomat::diagrams {

using algebra::cx;
using correlators::CorrelatorValue;
using correlators::EvalConfig;

enum class Theory { Cubic, Effective };

// Term tree of one diagram. Argument labels 0..k-1 are the leaves p_1..p_k; labels at or
// above kInternalLabel are points created inside the diagram (loop insertions and the
// sheet images of a multivalent vertex).
inline constexpr int kInternalLabel = 1 << 16;

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  enum class Kind {
    Propagator,   // W_2^(0)(head, args[0])
    Residue,      // W_{n}^(genus)(head, args): sum over branch points of Res (...) dS
    Bivalent,     // W_{k+1}(p^i, args) / ((y^i - y^l0) dx), cubic
    Colored,      // sum_{l != l0, i} over W(p^l) R(p^l)/((y^i - y^l0) dx), cubic
    Multivalent,  // product of blocks on distinct non-physical sheets, effective
  };
  Kind kind = Kind::Propagator;
  int genus = 0;
  std::vector<int> args;            // sorted argument labels
  int internal = -1;                // label created here by a loop insertion, or -1
  std::vector<NodePtr> children;    // see the kind comments; Residue: {R or vertex, W?}
  std::vector<int> block_sheets;    // Multivalent: sheet count of each block
  std::vector<std::vector<int>> block_tails;  // Multivalent: labels of the extra sheets
  double symmetry = 1.0;            // Multivalent: divisor of the ordered sheet sum
  std::string key;                  // canonical form of the subtree

  bool loop() const noexcept { return internal >= 0; }
};

enum class VertexKind { ResidueTrivalent, Bivalent, ColoredTrivalent, Multivalent };
enum class EdgeType { Arrowed, ArrowedWaved, Plain };

struct Vertex {
  VertexKind kind = VertexKind::ResidueTrivalent;
  int genus = 0;
  std::string point;                 // abstract point and sheet, e.g. "q1^i1"
  std::vector<std::string> summed;   // sheet indices summed at this vertex
  int r = 0;                         // number of blocks of a multivalent vertex
  int valence = 0;
};

// from = -1 is the root p; to = -1 marks a leaf edge ending at p_{leaf + 1}.
struct Edge {
  EdgeType type = EdgeType::Arrowed;
  int from = -1;
  int to = -1;
  int leaf = -1;
};

struct Diagram {
  Theory theory = Theory::Cubic;
  int k = 0;  // leaves; the diagram contributes to W_{k+1}^(h)
  int h = 0;
  std::vector<Vertex> vertices;  // preorder, vertex 0 is the root vertex
  std::vector<Edge> edges;
  double symmetry = 1.0;
  NodePtr tree;

  int trivalent() const;
  int loop_closures() const;  // plain edges ending on a vertex
};

// All diagrams of W_{k+1}^(h) in a deterministic order. W_1^(0) and W_2^(0) have none.
std::vector<Diagram> enumerate(int k, int h, Theory theory, int d2);

// Diagrams of the cubic theory without colored vertices: those surviving on d2 = 1.
std::size_t count_uncolored(const std::vector<Diagram>& ds);

// Value of one diagram at points = (p, p_1, ..., p_k), reduced by the dz factors.
CorrelatorValue evaluate(const curve::SpectralCurve& c, const Diagram& d, const std::vector<cx>& points,
                         const EvalConfig& cfg = {});

// Sum of all diagrams of W_{k+1}^(h) at points = (p, p_1, ..., p_k).
CorrelatorValue diagram_sum(const curve::SpectralCurve& c, int k, int h, Theory theory,
                            const std::vector<cx>& points, const EvalConfig& cfg = {});

const char* theory_name(Theory t) noexcept;
const char* vertex_kind_name(VertexKind k) noexcept;
const char* edge_type_name(EdgeType t) noexcept;

nlohmann::json to_json(const Diagram& d);
nlohmann::json to_json(const std::vector<Diagram>& ds);

}  // namespace twomat::diagrams
