#include "markov/sections.hpp"

#include <algorithm>
#include <set>

#include "markov/two_sat.hpp"

namespace markov {

namespace {

// Fiber letters of a canonical vertex production: the two top vertices in id
// order. The A/B marking of the construction is exactly this order.
std::pair<std::string, std::string> fiber_letters(const Production& vp) {
  return {vp.top.vertices()[0].id, vp.top.vertices()[1].id};
}

bool is_canonical_vertex_production(const Production& p) {
  return production_kind(p) == ProductionKind::Vertex && p.top.vertex_count() == 2 &&
         p.top.edge_count() == 1;
}

// A path across an edge-production top is monotone when it projects onto the
// bottom edge without backtracking: endpoints over the two bottom vertices,
// interior over the barycenter.
bool monotone_path(const Production& ep, const std::vector<std::string>& path) {
  const Edge& be = ep.bottom.edges()[0];
  const SubdivisionPoint front = ep.map.at(path.front());
  const SubdivisionPoint back = ep.map.at(path.back());
  if (front.kind != SubdivisionPoint::Kind::Vertex || back.kind != SubdivisionPoint::Kind::Vertex) {
    return false;
  }
  if (!((front.id == be.ends[0] && back.id == be.ends[1]) ||
        (front.id == be.ends[1] && back.id == be.ends[0]))) {
    return false;
  }
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    if (ep.map.at(path[i]) != at_barycenter(be.id)) return false;
  }
  return true;
}

}  // namespace

std::map<std::string, PairingFeasibility> pairing_feasibility(const MarkovDiagram& d,
                                                              const DiagramReport& report) {
  std::map<std::string, PairingFeasibility> out;
  for (const auto& rule : report.edge_rules) {
    const Production& ep = *d.find_production(rule.production);
    const Gluing& tail_gl = *d.find_gluing(rule.tail_gluing);
    const Gluing& head_gl = *d.find_gluing(rule.head_gluing);
    const Production& vp_tail = *d.find_production(tail_gl.src);
    const Production& vp_head = *d.find_production(head_gl.src);
    if (!is_canonical_vertex_production(vp_tail) || !is_canonical_vertex_production(vp_head)) {
      continue;  // pairing talk only makes sense for two-point fibers
    }
    const auto [tail_a, tail_b] = fiber_letters(vp_tail);
    const auto [head_a, head_b] = fiber_letters(vp_head);
    const std::string at = tail_gl.top_map.at(tail_a);
    const std::string bt = tail_gl.top_map.at(tail_b);
    const std::string ah = head_gl.top_map.at(head_a);
    const std::string bh = head_gl.top_map.at(head_b);

    auto admissible = [&](const std::vector<std::string>& path) {
      return monotone_path(ep, path);
    };

    PairingFeasibility f;
    f.straight_paths = two_disjoint_paths(ep.top, at, ah, bt, bh, admissible);
    f.straight = f.straight_paths.has_value();
    f.crossed_paths = two_disjoint_paths(ep.top, at, bh, bt, ah, admissible);
    f.crossed = f.crossed_paths.has_value();
    out.emplace(rule.production, std::move(f));
  }
  return out;
}

SectionsResult build_sections(const MarkovDiagram& d, const DiagramReport& report,
                              const Expansion& levels, int level) {
  SectionsResult result;
  if (level < 1 || static_cast<std::size_t>(level + 1) > levels.size()) {
    result.issues.push_back({"PreconditionFailed", "",
                             "sections at level " + std::to_string(level) +
                                 " need the expansion to reach level " + std::to_string(level + 1)});
    return result;
  }
  // Hypotheses of the construction: elementary diagram, canonical vertex
  // productions. (Biconnected tops make the path searches succeed but are
  // not needed for well-formedness.)
  if (!report.expandable()) {
    result.issues.push_back({"PreconditionFailed", d.name, "diagram is not expandable"});
    return result;
  }
  for (const auto& rule : report.vertex_rules) {
    if (!is_canonical_vertex_production(*d.find_production(rule.production))) {
      result.issues.push_back({"PreconditionFailed", rule.production,
                               "vertex production is not a single edge over a vertex"});
    }
  }
  if (!result.issues.empty()) return result;

  const ColoredGraph& base = levels[level - 1].graph;
  const DecompositionStep& step = *levels[level].step;
  const CellAssignment assignment = assign_productions(base, report);

  SectionPair sections;
  sections.level = level;
  sections.feasibility = pairing_feasibility(d, report);

  // One boolean per base vertex: which fiber letter f picks.
  std::vector<std::string> vertex_ids;
  for (const auto& v : base.vertices()) vertex_ids.push_back(v.id);
  std::map<std::string, int> vertex_var;
  for (std::size_t i = 0; i < vertex_ids.size(); ++i) {
    vertex_var[vertex_ids[i]] = static_cast<int>(i);
  }

  TwoSat solver(vertex_ids.size());
  std::vector<std::string> infeasible_edges;
  for (const auto& e : base.edges()) {
    const auto& assign = assignment.edge_production.at(e.id);
    const PairingFeasibility& f = sections.feasibility.at(assign.production);
    const int u = vertex_var.at(assign.tail);
    const int w = vertex_var.at(assign.head);
    if (f.straight && f.crossed) continue;
    if (f.straight) {
      solver.add_equal(u, w);
    } else if (f.crossed) {
      solver.add_not_equal(u, w);
    } else {
      infeasible_edges.push_back(e.id);
    }
  }
  if (!infeasible_edges.empty()) {
    for (const auto& e : infeasible_edges) {
      result.issues.push_back({"ConstructionFailed", e, "no pairing admits disjoint monotone paths"});
    }
    return result;
  }
  const auto solution = solver.solve();
  if (!solution) {
    for (int v : solver.contradiction_witness()) {
      result.issues.push_back({"ConstructionFailed", vertex_ids[v],
                               "fiber choice constraints are contradictory at this vertex"});
    }
    return result;
  }

  // Fiber choices.
  for (const auto& v : base.vertices()) {
    const Production& vp = *d.find_production(assignment.vertex_production.at(v.id));
    const auto [a, b] = fiber_letters(vp);
    const ChartEntry* chart = step.chart.find(v.id);
    const bool pick_b = (*solution)[vertex_var.at(v.id)];
    sections.f_vertex[v.id] = chart->top.vertex_image.at(pick_b ? b : a);
    sections.g_vertex[v.id] = chart->top.vertex_image.at(pick_b ? a : b);
  }

  // Paths across every edge instance, mapped through the chart.
  for (const auto& e : base.edges()) {
    const auto& assign = assignment.edge_production.at(e.id);
    const PairingFeasibility& feas = sections.feasibility.at(assign.production);
    const bool tail_b = (*solution)[vertex_var.at(assign.tail)];
    const bool head_b = (*solution)[vertex_var.at(assign.head)];
    const bool crossed = tail_b != head_b;
    const PathPair* pair = crossed ? (feas.crossed_paths ? &*feas.crossed_paths : nullptr)
                                   : (feas.straight_paths ? &*feas.straight_paths : nullptr);
    if (pair == nullptr) {
      result.issues.push_back({"ConstructionFailed", e.id, "solver picked an unavailable pairing"});
      return result;
    }
    // pair->first starts at the tail image of the first fiber letter; f gets
    // whichever path starts at its own tail choice.
    const ChartEntry* chart = step.chart.find(e.id);
    auto realize = [&](const std::vector<std::string>& top_path) {
      std::vector<std::string> out;
      for (const auto& tv : top_path) out.push_back(chart->top.vertex_image.at(tv));
      return out;
    };
    const std::vector<std::string>& f_top = tail_b ? pair->second : pair->first;
    const std::vector<std::string>& g_top = tail_b ? pair->first : pair->second;
    sections.f_path[e.id] = realize(f_top);
    sections.g_path[e.id] = realize(g_top);
    sections.edge_crossed[e.id] = crossed;
  }

  result.sections = std::move(sections);
  return result;
}

std::vector<Issue> verify_sections(const Expansion& levels, const SectionPair& s) {
  std::vector<Issue> issues;
  if (s.level < 1 || static_cast<std::size_t>(s.level + 1) > levels.size()) {
    issues.push_back({"PreconditionFailed", "", "section level outside the expansion"});
    return issues;
  }
  const ColoredGraph& base = levels[s.level - 1].graph;
  const ColoredGraph& next = levels[s.level].graph;
  const auto& bonding = levels[s.level].step->bonding;

  // Fiber section property and per-vertex disjointness.
  for (const auto& v : base.vertices()) {
    for (const auto* side : {&s.f_vertex, &s.g_vertex}) {
      auto it = side->find(v.id);
      if (it == side->end()) {
        issues.push_back({"SectionIncomplete", v.id, "no fiber choice"});
        continue;
      }
      if (!next.has_vertex(it->second)) {
        issues.push_back({"SectionInvalid", v.id, "fiber choice is not a vertex upstairs"});
        continue;
      }
      if (bonding.at(it->second) != at_vertex(v.id)) {
        issues.push_back({"SectionNotFiber", v.id,
                          "chosen vertex '" + it->second + "' does not lie over its base vertex"});
      }
    }
    if (s.f_vertex.count(v.id) != 0 && s.g_vertex.count(v.id) != 0 &&
        s.f_vertex.at(v.id) == s.g_vertex.at(v.id)) {
      issues.push_back({"SectionsNotDisjoint", v.id, "f and g pick the same fiber vertex"});
    }
  }

  // Path checks: real simple paths, correct endpoints, monotone projection.
  auto check_paths = [&](const std::map<std::string, std::vector<std::string>>& paths,
                         const std::map<std::string, std::string>& section_vertex,
                         const std::string& label) {
    for (const auto& e : base.edges()) {
      auto it = paths.find(e.id);
      if (it == paths.end()) {
        issues.push_back({"SectionIncomplete", e.id, "no " + label + " path"});
        continue;
      }
      const auto& path = it->second;
      if (path.size() < 2) {
        issues.push_back({"SectionInvalid", e.id, label + " path too short"});
        continue;
      }
      std::set<std::string> seen;
      bool ok = true;
      for (const auto& v : path) {
        if (!next.has_vertex(v) || !seen.insert(v).second) {
          issues.push_back({"SectionInvalid", e.id, label + " path is not simple"});
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (next.find_edge_between(path[i], path[i + 1]) == nullptr) {
          issues.push_back({"SectionInvalid", e.id,
                            label + " path skips between '" + path[i] + "' and '" + path[i + 1] + "'"});
          ok = false;
          break;
        }
      }
      if (!ok) continue;

      const std::string& su = section_vertex.at(e.ends[0]);
      const std::string& sw = section_vertex.at(e.ends[1]);
      if (!((path.front() == su && path.back() == sw) ||
            (path.front() == sw && path.back() == su))) {
        issues.push_back({"SectionInvalid", e.id,
                          label + " path does not join the chosen fiber vertices"});
      }
      // Monotone projection onto the base edge.
      const SubdivisionPoint front = bonding.at(path.front());
      const SubdivisionPoint back = bonding.at(path.back());
      if (front.kind != SubdivisionPoint::Kind::Vertex ||
          back.kind != SubdivisionPoint::Kind::Vertex || front.id == back.id) {
        issues.push_back({"SectionNotMonotone", e.id, label + " path endpoints off the fibers"});
      }
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (bonding.at(path[i]) != at_barycenter(e.id)) {
          issues.push_back({"SectionNotMonotone", e.id,
                            label + " interior vertex '" + path[i] + "' is not over the barycenter"});
          break;
        }
      }
    }
  };
  check_paths(s.f_path, s.f_vertex, "f");
  check_paths(s.g_path, s.g_vertex, "g");

  // Global injectivity and image disjointness.
  auto image = [&](const std::map<std::string, std::string>& vertices,
                   const std::map<std::string, std::vector<std::string>>& paths,
                   const std::string& label) {
    std::set<std::string> section_values;
    for (const auto& [base_v, img] : vertices) {
      if (!section_values.insert(img).second) {
        issues.push_back({"SectionNotInjective", base_v, label + " reuses vertex '" + img + "'"});
      }
    }
    std::set<std::string> all = section_values;
    std::set<std::string> interiors;
    for (const auto& [edge_id, path] : paths) {
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (section_values.count(path[i]) != 0 || !interiors.insert(path[i]).second) {
          issues.push_back({"SectionNotInjective", edge_id,
                            label + " path interior reuses vertex '" + path[i] + "'"});
        }
        all.insert(path[i]);
      }
    }
    return all;
  };
  const std::set<std::string> f_image = image(s.f_vertex, s.f_path, "f");
  const std::set<std::string> g_image = image(s.g_vertex, s.g_path, "g");
  for (const auto& v : f_image) {
    if (g_image.count(v) != 0) {
      issues.push_back({"SectionsNotDisjoint", v, "vertex lies in both images"});
    }
  }
  return issues;
}

}  // namespace markov
