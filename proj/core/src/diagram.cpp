#include "markov/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace markov {

ProductionKind production_kind(const Production& p) {
  if (p.bottom.vertex_count() == 1 && p.bottom.edge_count() == 0) {
    return ProductionKind::Vertex;
  }
  if (p.bottom.vertex_count() == 2 && p.bottom.edge_count() == 1) {
    return ProductionKind::Edge;
  }
  return ProductionKind::General;
}

const Production* MarkovDiagram::find_production(const std::string& name) const {
  for (const auto& p : productions) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

const Gluing* MarkovDiagram::find_gluing(const std::string& name) const {
  for (const auto& g : gluings) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

void MarkovDiagram::normalize() {
  std::sort(productions.begin(), productions.end(),
            [](const Production& a, const Production& b) { return a.name < b.name; });
  std::sort(gluings.begin(), gluings.end(),
            [](const Gluing& a, const Gluing& b) { return a.name < b.name; });
}

SubdivisionPoint push_subdivision_point(const SubdivisionPoint& p,
                                        const std::map<std::string, std::string>& vertex_map,
                                        const std::map<std::string, std::string>& edge_map) {
  if (p.kind == SubdivisionPoint::Kind::Vertex) {
    auto it = vertex_map.find(p.id);
    if (it == vertex_map.end()) throw std::out_of_range("no image for vertex '" + p.id + "'");
    return at_vertex(it->second);
  }
  auto it = edge_map.find(p.id);
  if (it == edge_map.end()) throw std::out_of_range("no image for edge '" + p.id + "'");
  return at_barycenter(it->second);
}

}  // namespace markov
