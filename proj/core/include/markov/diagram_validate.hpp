#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "markov/diagram.hpp"

namespace markov {

struct ProductionVerdict {
  std::string name;
  bool ok = false;
  ProductionKind kind = ProductionKind::General;
  MapClassification classification;
  std::vector<Issue> issues;
};

struct GluingVerdict {
  std::string name;
  bool ok = false;
  std::vector<Issue> issues;
  // Induced edge maps, cached for expansion and re-verification.
  std::map<std::string, std::string> top_edge_image;
  std::map<std::string, std::string> bottom_edge_image;
};

/// Which production rewrites a vertex of this color.
struct VertexRule {
  Color color = 0;
  std::string production;
};

/// Which production rewrites an edge with this signature, and which gluing
/// attaches the endpoint instance at each role. The rule's tail/head colors
/// follow the stored order of the production's bottom edge.
struct EdgeRule {
  Color edge_color = 0;
  Color tail_color = 0;
  Color head_color = 0;
  std::string production;
  std::string tail_gluing;
  std::string head_gluing;
};

/// Pure function of the diagram; declaration order never shows through
/// (everything is keyed and sorted by name or color).
struct DiagramReport {
  std::vector<Issue> structural_issues;  // DuplicateName, ColorNotInPalette, graph issues
  std::vector<ProductionVerdict> productions;
  std::vector<GluingVerdict> gluings;
  bool elementary = false;
  bool coverage_complete = false;
  std::vector<VertexRule> vertex_rules;
  std::vector<EdgeRule> edge_rules;
  std::vector<Issue> coverage_issues;  // MissingProduction / Ambiguous* / MissingGluing

  bool valid() const;       // graphs, productions, gluings all pass
  bool expandable() const;  // valid, elementary, coverage complete
  std::vector<Issue> all_issues() const;

  const VertexRule* vertex_rule(Color c) const;
  const EdgeRule* edge_rule(Color edge_color, Color end_a, Color end_b) const;
  const ProductionVerdict* production_verdict(const std::string& name) const;
  const GluingVerdict* gluing_verdict(const std::string& name) const;
};

ProductionVerdict validate_production(const Production& p);
GluingVerdict validate_gluing(const Gluing& g, const MarkovDiagram& diagram);
bool check_elementary(const MarkovDiagram& d);
DiagramReport validate_diagram(const MarkovDiagram& d);

}  // namespace markov
