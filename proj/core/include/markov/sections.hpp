#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "markov/expansion.hpp"
#include "markov/graph_algorithms.hpp"

namespace markov {

/// Can the two fiber letters be routed straight (first letter to first
/// letter) or crossed across one edge-production top? Paths are stored in
/// top-graph vertex ids, tail fiber to head fiber.
struct PairingFeasibility {
  bool straight = false;
  bool crossed = false;
  std::optional<PathPair> straight_paths;
  std::optional<PathPair> crossed_paths;
};

/// Disjoint sections f, g : K_i -> K_{i+1} of the bonding map: per-vertex
/// fiber choices plus a monotone path over every edge, with im f and im g
/// disjoint and p . f = p . g = id on the cell structure.
struct SectionPair {
  int level = 1;  // i
  std::map<std::string, std::string> f_vertex;
  std::map<std::string, std::string> g_vertex;
  std::map<std::string, std::vector<std::string>> f_path;  // edge of K_i -> path in K_{i+1}
  std::map<std::string, std::vector<std::string>> g_path;
  std::map<std::string, PairingFeasibility> feasibility;  // per edge production
  std::map<std::string, bool> edge_crossed;               // pairing used per edge
};

struct SectionsResult {
  std::optional<SectionPair> sections;
  std::vector<Issue> issues;  // PreconditionFailed or ConstructionFailed(+witnesses)
  bool ok() const { return sections.has_value(); }
};

/// Pairing feasibility per edge production, independent of any level.
/// Requires canonical vertex productions (checked by the caller).
std::map<std::string, PairingFeasibility> pairing_feasibility(const MarkovDiagram& d,
                                                              const DiagramReport& report);

/// Constructs the section pair for level i (needs levels expanded to i+1).
/// Feasible pairings per edge become equality/inequality constraints on the
/// per-vertex fiber choices; a 2-SAT solve picks a globally consistent
/// assignment. Failure reports the edges with no feasible pairing, or a
/// constraint contradiction witness. A failure is a gap of this
/// construction, not a refutation of the disjoint arcs property.
SectionsResult build_sections(const MarkovDiagram& d, const DiagramReport& report,
                              const Expansion& levels, int level);

/// Independent verification of every SectionPair invariant: embeddings,
/// image disjointness, the fiber section property, monotone path images.
std::vector<Issue> verify_sections(const Expansion& levels, const SectionPair& s);

}  // namespace markov
