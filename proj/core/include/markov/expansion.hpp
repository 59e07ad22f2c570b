#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "markov/diagram.hpp"
#include "markov/diagram_validate.hpp"

namespace markov {

enum class EndpointRole { Tail, Head };

inline const char* role_name(EndpointRole r) { return r == EndpointRole::Tail ? "tail" : "head"; }

/// Cell-to-production assignment for one level. Edges also record the
/// orientation used for matching: colors force it when the bottom endpoint
/// colors differ, otherwise the lexicographically smaller address is the tail.
struct CellAssignment {
  std::map<std::string, std::string> vertex_production;
  struct EdgeAssign {
    std::string production;
    std::string tail;
    std::string head;
  };
  std::map<std::string, EdgeAssign> edge_production;
};

CellAssignment assign_productions(const ColoredGraph& level, const DiagramReport& report);

/// Directed incidence graph of one level: a node per cell labeled with its
/// production, an arc per (vertex in edge) incidence labeled with the gluing
/// that identifies the two instantiated tops.
struct AssemblyNode {
  std::string cell;
  bool is_edge = false;
  std::string production;
};
struct AssemblyArc {
  std::string vertex_cell;
  std::string edge_cell;
  EndpointRole role = EndpointRole::Tail;
  std::string gluing;
};
struct AssemblyGraph {
  std::vector<AssemblyNode> nodes;  // sorted by cell
  std::vector<AssemblyArc> arcs;    // sorted by (edge_cell, role)
};

/// Images of one production instance: top cells into the next level, bottom
/// cells into the current level.
struct CellEmbedding {
  std::map<std::string, std::string> vertex_image;
  std::map<std::string, std::string> edge_image;
};
struct ChartEntry {
  std::string cell;
  bool is_edge = false;
  CellEmbedding top;
  CellEmbedding bottom;
};
struct Chart {
  std::vector<ChartEntry> entries;  // sorted by cell
  const ChartEntry* find(const std::string& cell) const;
};

/// Decomposition of the bonding map p : K_{n+1} -> K_n. Stored with level
/// n+1; the assembly graph and bottom charts live over K_n.
struct DecompositionStep {
  std::map<std::string, SubdivisionPoint> bonding;  // vertex of K_{n+1} -> point of beta(K_n)
  AssemblyGraph assembly;
  Chart chart;
};

struct LevelState {
  int index = 1;
  ColoredGraph graph;
  std::optional<DecompositionStep> step;  // absent at index 1
};

using Expansion = std::vector<LevelState>;

struct ExpandResult {
  Expansion levels;
  std::vector<Issue> issues;  // NotExpandable / UnintendedCollision; empty on success
  bool ok() const { return issues.empty(); }
};

/// One expansion step. Instantiates every cell's production top under the
/// hierarchical address scheme (parent address | production | top cell id),
/// applies every gluing through union-find address unification, and
/// canonicalizes each class to its lexicographically least address.
ExpandResult expand_once(const MarkovDiagram& d, const DiagramReport& report,
                         const LevelState& current);

/// K_1 = start, then depth-1 expansion steps. depth >= 1.
ExpandResult expand(const MarkovDiagram& d, int depth);
ExpandResult expand(const MarkovDiagram& d, const DiagramReport& report, int depth);

}  // namespace markov
