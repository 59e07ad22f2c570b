#pragma once

#include <map>
#include <string>
#include <vector>

#include "markov/colored_graph.hpp"
#include "markov/maps.hpp"

namespace markov {

/// Rewrite rule: a simplicial or quasi-simplicial map from the top graph onto
/// the bottom graph. `map` sends each top vertex into the subdivision of the
/// bottom.
struct Production {
  std::string name;
  ColoredGraph top;
  ColoredGraph bottom;
  std::map<std::string, SubdivisionPoint> map;
};

enum class ProductionKind { Vertex, Edge, General };

/// Vertex iff the bottom is a single vertex, Edge iff a single edge with its
/// two endpoints; everything else is General (representable, not expandable).
ProductionKind production_kind(const Production& p);

/// Identifies instantiated tops across adjacent cells: a pair of colored
/// embeddings (top of src into top of dst, bottom of src into bottom of dst)
/// making the square with the two production maps commute.
struct Gluing {
  std::string name;
  std::string src;  // production names
  std::string dst;
  std::map<std::string, std::string> top_map;
  std::map<std::string, std::string> bottom_map;
};

struct MarkovDiagram {
  std::string name;
  std::map<Color, std::string> palette;  // color -> display name / dot style
  ColoredGraph start;
  std::vector<Production> productions;  // sorted by name
  std::vector<Gluing> gluings;          // sorted by name
  std::string notes;

  const Production* find_production(const std::string& name) const;
  const Gluing* find_gluing(const std::string& name) const;

  /// Re-establishes name ordering after construction.
  void normalize();
};

/// Pushes a subdivision point of b(src) through a bottom embedding:
/// vertices through the vertex map, barycenters through the induced edge map.
SubdivisionPoint push_subdivision_point(const SubdivisionPoint& p,
                                        const std::map<std::string, std::string>& vertex_map,
                                        const std::map<std::string, std::string>& edge_map);

}  // namespace markov
