#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "markov/issue.hpp"

namespace markov {

using Color = int;

struct Vertex {
  std::string id;
  Color color = 0;

  bool operator==(const Vertex&) const = default;
};

/// Unordered pair of endpoints. The stored order is still meaningful in one
/// place: a production's bottom edge reads ends[0] as tail and ends[1] as
/// head, which is how gluing roles are told apart.
struct Edge {
  std::string id;
  std::array<std::string, 2> ends;
  Color color = 0;

  bool operator==(const Edge&) const = default;
};

/// Finite colored graph (1-dimensional colored simplicial complex).
/// Vertices and edges are kept sorted by id, so every iteration over a graph
/// is deterministic. Values are immutable after construction.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  ColoredGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(const std::string& id) const;
  bool has_edge(const std::string& id) const;
  const Vertex* find_vertex(const std::string& id) const;
  const Edge* find_edge(const std::string& id) const;
  /// Edge with endpoint set {a, b}, either orientation. Null when absent.
  const Edge* find_edge_between(const std::string& a, const std::string& b) const;

  /// Sorted ids of adjacent vertices.
  std::vector<std::string> neighbors(const std::string& vertex) const;
  /// Incident edges in id order.
  std::vector<const Edge*> incident_edges(const std::string& vertex) const;

  bool operator==(const ColoredGraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;
};

/// Checks all ColoredGraph invariants. Issue codes: DuplicateId,
/// DanglingEndpoint, SelfLoop, DuplicateEdge.
std::vector<Issue> validate_graph(const ColoredGraph& g);

inline bool graph_ok(const ColoredGraph& g) { return validate_graph(g).empty(); }

}  // namespace markov
