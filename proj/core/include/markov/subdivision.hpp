#pragma once

#include <map>
#include <optional>
#include <string>

#include "markov/colored_graph.hpp"

namespace markov {

/// A vertex of the barycentric subdivision of some graph: either one of the
/// original vertices or the barycenter of one of its edges.
struct SubdivisionPoint {
  enum class Kind { Vertex, Barycenter };
  Kind kind = Kind::Vertex;
  std::string id;  // vertex id or edge id in the base graph

  bool operator==(const SubdivisionPoint&) const = default;
  auto operator<=>(const SubdivisionPoint&) const = default;
};

inline SubdivisionPoint at_vertex(std::string id) {
  return {SubdivisionPoint::Kind::Vertex, std::move(id)};
}
inline SubdivisionPoint at_barycenter(std::string edge_id) {
  return {SubdivisionPoint::Kind::Barycenter, std::move(edge_id)};
}

/// Text form used by the diagram format and by serialized bonding maps:
/// "v:<vertex id>" or "bary:<edge id>".
std::string subdivision_point_to_string(const SubdivisionPoint& p);
std::optional<SubdivisionPoint> subdivision_point_from_string(const std::string& text);

/// Barycentric subdivision together with the correspondence back to the base
/// graph. New cells inherit the color of the edge they subdivide. Naming
/// scheme (stable, collision-free because source ids never contain '~'):
///   barycenter of edge e   -> vertex  "e~b"
///   halves of edge e       -> edges   "e~0" (tail side), "e~1" (head side)
struct Subdivision {
  ColoredGraph graph;
  std::map<std::string, SubdivisionPoint> vertex_origin;  // beta-vertex -> base point
  std::map<std::string, std::string> half_edge_parent;    // beta-edge -> base edge

  std::string barycenter_id(const std::string& edge_id) const { return edge_id + "~b"; }
  /// Id in beta(g) of a base subdivision point.
  std::string vertex_id_of(const SubdivisionPoint& p) const {
    return p.kind == SubdivisionPoint::Kind::Vertex ? p.id : p.id + "~b";
  }
};

Subdivision barycentric_subdivide(const ColoredGraph& g);

}  // namespace markov
