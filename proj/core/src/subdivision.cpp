#include "markov/subdivision.hpp"

namespace markov {

std::string subdivision_point_to_string(const SubdivisionPoint& p) {
  return (p.kind == SubdivisionPoint::Kind::Vertex ? "v:" : "bary:") + p.id;
}

std::optional<SubdivisionPoint> subdivision_point_from_string(const std::string& text) {
  if (text.rfind("v:", 0) == 0 && text.size() > 2) {
    return at_vertex(text.substr(2));
  }
  if (text.rfind("bary:", 0) == 0 && text.size() > 5) {
    return at_barycenter(text.substr(5));
  }
  return std::nullopt;
}

Subdivision barycentric_subdivide(const ColoredGraph& g) {
  Subdivision out;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  for (const auto& v : g.vertices()) {
    vertices.push_back(v);
    out.vertex_origin[v.id] = at_vertex(v.id);
  }
  for (const auto& e : g.edges()) {
    const std::string bary = e.id + "~b";
    vertices.push_back({bary, e.color});
    out.vertex_origin[bary] = at_barycenter(e.id);
    edges.push_back({e.id + "~0", {e.ends[0], bary}, e.color});
    edges.push_back({e.id + "~1", {bary, e.ends[1]}, e.color});
    out.half_edge_parent[e.id + "~0"] = e.id;
    out.half_edge_parent[e.id + "~1"] = e.id;
  }

  out.graph = ColoredGraph(std::move(vertices), std::move(edges));
  return out;
}

}  // namespace markov
