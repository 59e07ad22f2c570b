#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "markov/colored_graph.hpp"
#include "markov/subdivision.hpp"

namespace markov {

/// Vertex assignment into the codomain's barycentric subdivision. Plain
/// simplicial maps are the special case that never targets a barycenter.
struct QuasiSimplicialMap {
  ColoredGraph domain;
  ColoredGraph codomain;
  std::map<std::string, SubdivisionPoint> vertex_image;
};

/// Legal image shapes of a domain edge.
enum class EdgeImageShape {
  Degenerate,  // both endpoints at the same subdivision point
  HalfEdge,    // {endpoint w, barycenter of e} with w an end of e
  FullEdge,    // both endpoints of one codomain edge
  Invalid,
};

struct MapClassification {
  bool valid = false;             // total, targets exist, every edge image legal
  bool simplicial = false;        // valid and no vertex image is a barycenter
  bool quasi_simplicial = false;  // valid and no edge image is a full codomain edge
  std::map<std::string, EdgeImageShape> edge_shapes;
  std::vector<Issue> issues;  // InvalidEdgeImage / MissingImage / UnknownTarget
};

MapClassification classify_map(const ColoredGraph& domain, const ColoredGraph& codomain,
                               const std::map<std::string, SubdivisionPoint>& vertex_image);

inline MapClassification classify_map(const QuasiSimplicialMap& m) {
  return classify_map(m.domain, m.codomain, m.vertex_image);
}

/// Colored-embedding verdict for a plain vertex map. When the map passes,
/// `edge_image` holds the induced map on edges.
struct EmbeddingCheck {
  bool ok = false;
  std::vector<Issue> issues;  // NotInjective / EdgeNotPreserved / ColorMismatch / ...
  std::map<std::string, std::string> edge_image;
};

EmbeddingCheck check_colored_embedding(const ColoredGraph& domain, const ColoredGraph& codomain,
                                       const std::map<std::string, std::string>& vertex_map);

/// First color-preserving bijective simplicial map in backtracking order over
/// sorted ids, or nullopt. Deterministic.
std::optional<std::map<std::string, std::string>> colored_isomorphism(const ColoredGraph& a,
                                                                      const ColoredGraph& b);

}  // namespace markov
