#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "markov/colored_graph.hpp"
#include "markov/rational.hpp"

namespace markov {

/// Maximal connected vertex sets. Components ordered by smallest member,
/// members sorted.
std::vector<std::vector<std::string>> connected_components(const ColoredGraph& g);

inline bool is_connected(const ColoredGraph& g) {
  return g.vertex_count() == 0 || connected_components(g).size() == 1;
}

struct BiconnectivityReport {
  bool connected = false;
  bool biconnected = false;
  std::vector<std::string> articulation_vertices;  // sorted
};

/// Biconnected := connected and no articulation vertex, with two degenerate
/// conventions: a single-edge graph counts as biconnected, graphs with fewer
/// than two vertices or with 2 vertices and no edge do not.
BiconnectivityReport is_biconnected(const ColoredGraph& g);

/// Unweighted BFS distances from `source` in edge counts; -1 for unreachable.
std::map<std::string, int> bfs_distances(const ColoredGraph& g, const std::string& source);

/// Largest finite pairwise distance in edge counts (0 for <= 1 vertex).
/// Pairs in different components are ignored.
int graph_diameter(const ColoredGraph& g);

/// kappa * (shortest-path edge count); nullopt when u, v lie in different
/// components. Throws std::out_of_range for an unknown vertex.
std::optional<Rational> geodesic_distance(const ColoredGraph& g, const Rational& kappa,
                                          const std::string& u, const std::string& v);

struct PathPair {
  std::vector<std::string> first;   // s1 -> t1
  std::vector<std::string> second;  // s2 -> t2
};

/// Two simple paths s1->t1 and s2->t2, vertex-disjoint including endpoints,
/// or nullopt. Deterministic: first path shortest-first with lexicographic
/// tie-break, then the same rule for the second. `admissible`, when set,
/// filters individual candidate paths (used by the section builder to demand
/// monotone projections). Search is exhaustive; graphs beyond ~20 vertices
/// are pre-screened with a flow-based Menger bound before enumerating.
std::optional<PathPair> two_disjoint_paths(
    const ColoredGraph& g, const std::string& s1, const std::string& t1, const std::string& s2,
    const std::string& t2,
    const std::function<bool(const std::vector<std::string>&)>& admissible = {});

/// Max number of vertex-disjoint paths between the sets {s1,s2} and {t1,t2}
/// (vertex-capacity max flow). Used as a quick necessary bound.
int disjoint_path_bound(const ColoredGraph& g, const std::string& s1, const std::string& s2,
                        const std::string& t1, const std::string& t2);

/// Proper 2-coloring by BFS when one exists.
std::optional<std::map<std::string, int>> bipartition(const ColoredGraph& g);

}  // namespace markov
