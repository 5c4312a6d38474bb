// SPDX-License-Identifier: Apache-2.0
#include "diagrams/diagram.hpp"

namespace twomat::diagrams {

const char* theory_name(Theory t) noexcept { return t == Theory::Cubic ? "cubic" : "effective"; }

const char* vertex_kind_name(VertexKind k) noexcept {
  switch (k) {
    case VertexKind::ResidueTrivalent: return "residue-trivalent";
    case VertexKind::Bivalent: return "bivalent";
    case VertexKind::ColoredTrivalent: return "colored-trivalent";
    case VertexKind::Multivalent: return "multivalent";
  }
  return "unknown";
}

const char* edge_type_name(EdgeType t) noexcept {
  switch (t) {
    case EdgeType::Arrowed: return "arrowed";
    case EdgeType::ArrowedWaved: return "arrowed-waved";
    case EdgeType::Plain: return "plain";
  }
  return "unknown";
}

nlohmann::json to_json(const Diagram& d) {
  nlohmann::json vertices = nlohmann::json::array();
  for (size_t a = 0; a < d.vertices.size(); ++a) {
    const Vertex& v = d.vertices[a];
    nlohmann::json j{{"id", a},
                     {"kind", vertex_kind_name(v.kind)},
                     {"genus", v.genus},
                     {"point", v.point},
                     {"summed_sheets", v.summed},
                     {"valence", v.valence}};
    if (v.kind == VertexKind::Multivalent) j["r"] = v.r;
    vertices.push_back(std::move(j));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : d.edges) {
    nlohmann::json j{{"type", edge_type_name(e.type)}};
    j["from"] = e.from < 0 ? nlohmann::json("root") : nlohmann::json(e.from);
    j["to"] = e.to < 0 ? nlohmann::json("leaf " + std::to_string(e.leaf + 1)) : nlohmann::json(e.to);
    edges.push_back(std::move(j));
  }
  return {{"theory", theory_name(d.theory)},
          {"k", d.k},
          {"h", d.h},
          {"trivalent", d.trivalent()},
          {"loop_closures", d.loop_closures()},
          {"symmetry", d.symmetry},
          {"canonical", d.tree ? d.tree->key : ""},
          {"vertices", std::move(vertices)},
          {"edges", std::move(edges)}};
}

nlohmann::json to_json(const std::vector<Diagram>& ds) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& d : ds) list.push_back(to_json(d));
  return list;
}

}  // namespace twomat::diagrams
