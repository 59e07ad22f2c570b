#include "markov/decomposition_check.hpp"

#include <algorithm>
#include <set>

#include "markov/maps.hpp"

namespace markov {

namespace {

// Cells of a chart image as "v:"/"e:"-tagged strings, for cover and
// intersection accounting.
std::set<std::string> image_cells(const CellEmbedding& m) {
  std::set<std::string> out;
  for (const auto& [_, img] : m.vertex_image) out.insert("v:" + img);
  for (const auto& [_, img] : m.edge_image) out.insert("e:" + img);
  return out;
}

std::set<std::string> all_cells(const ColoredGraph& g) {
  std::set<std::string> out;
  for (const auto& v : g.vertices()) out.insert("v:" + v.id);
  for (const auto& e : g.edges()) out.insert("e:" + e.id);
  return out;
}

void check_embedding(const ColoredGraph& dom, const ColoredGraph& cod, const CellEmbedding& m,
                     const std::string& owner, std::vector<Issue>& issues) {
  EmbeddingCheck check = check_colored_embedding(dom, cod, m.vertex_image);
  for (auto issue : check.issues) {
    issue.subject = owner + "/" + issue.subject;
    issues.push_back(std::move(issue));
  }
  if (!check.ok) return;
  // The stored edge images must agree with the induced ones.
  for (const auto& e : dom.edges()) {
    auto it = m.edge_image.find(e.id);
    if (it == m.edge_image.end()) {
      issues.push_back({"MissingImage", owner + "/" + e.id, "edge image not recorded"});
      continue;
    }
    if (it->second != check.edge_image.at(e.id)) {
      issues.push_back({"EdgeNotPreserved", owner + "/" + e.id,
                        "recorded image '" + it->second + "' is not the edge spanned by the "
                        "vertex images"});
    }
  }
}

}  // namespace

std::vector<Issue> verify_decomposition(const MarkovDiagram& d, const ColoredGraph& base,
                                        const ColoredGraph& next, const DecompositionStep& step) {
  std::vector<Issue> issues;

  // Assembly nodes must enumerate the base cells exactly once, with known
  // production labels.
  std::set<std::string> node_cells;
  for (const auto& node : step.assembly.nodes) {
    if (!node_cells.insert(node.cell).second) {
      issues.push_back({"AssemblyInvalid", node.cell, "duplicate assembly node"});
    }
    const bool exists = node.is_edge ? base.has_edge(node.cell) : base.has_vertex(node.cell);
    if (!exists) {
      issues.push_back({"AssemblyInvalid", node.cell, "node is not a cell of the base level"});
    }
    if (d.find_production(node.production) == nullptr) {
      issues.push_back({"AssemblyInvalid", node.cell, "unknown production '" + node.production + "'"});
    }
    if (step.chart.find(node.cell) == nullptr) {
      issues.push_back({"AssemblyInvalid", node.cell, "no chart entry for node"});
    }
  }
  if (node_cells.size() != base.vertex_count() + base.edge_count()) {
    issues.push_back({"AssemblyInvalid", "",
                      "expected one node per base cell, got " + std::to_string(node_cells.size())});
  }
  if (!issues.empty()) return issues;

  auto production_of = [&](const std::string& cell) -> const Production& {
    for (const auto& node : step.assembly.nodes) {
      if (node.cell == cell) return *d.find_production(node.production);
    }
    throw std::logic_error("no node for cell " + cell);
  };

  // Chart maps are colored embeddings into the right levels.
  for (const auto& entry : step.chart.entries) {
    const Production& prod = production_of(entry.cell);
    check_embedding(prod.top, next, entry.top, entry.cell + "/top", issues);
    check_embedding(prod.bottom, base, entry.bottom, entry.cell + "/bottom", issues);
  }
  if (!issues.empty()) return issues;

  // Covers.
  {
    std::set<std::string> top_cover, bottom_cover;
    for (const auto& entry : step.chart.entries) {
      auto top = image_cells(entry.top);
      top_cover.insert(top.begin(), top.end());
      auto bottom = image_cells(entry.bottom);
      bottom_cover.insert(bottom.begin(), bottom.end());
    }
    for (const auto& cell : all_cells(next)) {
      if (top_cover.count(cell) == 0) {
        issues.push_back({"CoverFailure", cell, "not covered by any top chart image"});
      }
    }
    for (const auto& cell : all_cells(base)) {
      if (bottom_cover.count(cell) == 0) {
        issues.push_back({"CoverFailure", cell, "not covered by any bottom chart image"});
      }
    }
  }

  // Closure under intersection, checked exhaustively via a cell -> owners
  // index: any two chart images meet either not at all or exactly in the
  // chart image of a base vertex both cells contain.
  {
    std::map<std::string, std::set<std::string>> images;  // chart cell -> image cells
    std::map<std::string, std::vector<std::string>> owners;
    std::map<std::set<std::string>, std::string> by_image;  // image set -> chart cell
    for (const auto& entry : step.chart.entries) {
      auto img = image_cells(entry.top);
      for (const auto& cell : img) owners[cell].push_back(entry.cell);
      by_image.emplace(img, entry.cell);
      images.emplace(entry.cell, std::move(img));
    }
    std::set<std::pair<std::string, std::string>> meeting;
    for (auto& [_, list] : owners) {
      std::sort(list.begin(), list.end());
      for (std::size_t i = 0; i < list.size(); ++i) {
        for (std::size_t j = i + 1; j < list.size(); ++j) {
          meeting.insert({list[i], list[j]});
        }
      }
    }
    for (const auto& [a, b] : meeting) {
      std::set<std::string> inter;
      std::set_intersection(images[a].begin(), images[a].end(), images[b].begin(),
                            images[b].end(), std::inserter(inter, inter.begin()));
      // Intersection must itself be a chart image.
      if (by_image.count(inter) == 0) {
        issues.push_back({"IntersectionFailure", a + " & " + b,
                          "intersection of top images is not a chart image (size " +
                              std::to_string(inter.size()) + ")"});
      }
    }
  }

  // Arc conditions. For the arc (vertex cell u) -> (edge cell e):
  //   gluing square       P_e(G_t(x)) == G_b(P_u(x))
  //   chart coherence     f_u == f_e . G_t   and   g_u == g_e . G_b
  //   bonding squares     p(f(x)) == g-pushforward of P(x)   for both charts
  std::set<std::pair<std::string, bool>> arc_seen;
  for (const auto& arc : step.assembly.arcs) {
    const Gluing* gl = d.find_gluing(arc.gluing);
    if (gl == nullptr) {
      issues.push_back({"AssemblyInvalid", arc.gluing, "unknown gluing on arc"});
      continue;
    }
    const ChartEntry* cu = step.chart.find(arc.vertex_cell);
    const ChartEntry* ce = step.chart.find(arc.edge_cell);
    if (cu == nullptr || ce == nullptr) continue;  // already reported
    arc_seen.insert({arc.edge_cell, arc.role == EndpointRole::Head});

    const Production& pu = production_of(arc.vertex_cell);
    const Production& pe = production_of(arc.edge_cell);
    if (gl->src != pu.name || gl->dst != pe.name) {
      issues.push_back({"AssemblyInvalid", arc.gluing,
                        "gluing connects " + gl->src + "->" + gl->dst + " but arc nodes carry " +
                            pu.name + "->" + pe.name});
      continue;
    }

    // Re-derive the gluing's embeddings rather than trusting cached ones.
    EmbeddingCheck top_check = check_colored_embedding(pu.top, pe.top, gl->top_map);
    EmbeddingCheck bottom_check = check_colored_embedding(pu.bottom, pe.bottom, gl->bottom_map);
    if (!top_check.ok || !bottom_check.ok) {
      for (auto issue : top_check.issues) {
        issue.subject = arc.gluing + "/top_map/" + issue.subject;
        issues.push_back(std::move(issue));
      }
      for (auto issue : bottom_check.issues) {
        issue.subject = arc.gluing + "/bottom_map/" + issue.subject;
        issues.push_back(std::move(issue));
      }
      continue;
    }

    for (const auto& tv : pu.top.vertices()) {
      const SubdivisionPoint via_top = pe.map.at(gl->top_map.at(tv.id));
      const SubdivisionPoint via_bottom =
          push_subdivision_point(pu.map.at(tv.id), gl->bottom_map, bottom_check.edge_image);
      if (via_top != via_bottom) {
        issues.push_back({"CommutativityFailure", arc.gluing + "/" + tv.id,
                          "gluing square fails: " + subdivision_point_to_string(via_top) +
                              " vs " + subdivision_point_to_string(via_bottom)});
      }
      // f_u == f_e . G_t
      if (cu->top.vertex_image.at(tv.id) != ce->top.vertex_image.at(gl->top_map.at(tv.id))) {
        issues.push_back({"ChartCoherenceFailure", arc.vertex_cell + "/" + tv.id,
                          "vertex chart does not factor through the edge chart"});
      }
    }
    for (const auto& te : pu.top.edges()) {
      if (cu->top.edge_image.at(te.id) !=
          ce->top.edge_image.at(top_check.edge_image.at(te.id))) {
        issues.push_back({"ChartCoherenceFailure", arc.vertex_cell + "/" + te.id,
                          "edge chart does not factor through the edge chart"});
      }
    }
    // g_u == g_e . G_b
    for (const auto& bv : pu.bottom.vertices()) {
      if (cu->bottom.vertex_image.at(bv.id) !=
          ce->bottom.vertex_image.at(gl->bottom_map.at(bv.id))) {
        issues.push_back({"ChartCoherenceFailure", arc.vertex_cell + "/" + bv.id,
                          "bottom charts do not commute with the gluing"});
      }
    }
  }
  // Each (edge cell, role) incidence carries exactly one arc.
  for (const auto& e : base.edges()) {
    for (bool head : {false, true}) {
      if (arc_seen.count({e.id, head}) == 0) {
        issues.push_back({"AssemblyInvalid", e.id,
                          std::string("missing arc for ") + (head ? "head" : "tail") + " role"});
      }
    }
  }

  // Bonding squares p . f_v == g_v-pushforward of the production map, for
  // every chart entry and every top vertex.
  for (const auto& entry : step.chart.entries) {
    const Production& prod = production_of(entry.cell);
    for (const auto& tv : prod.top.vertices()) {
      auto img = step.bonding.find(entry.top.vertex_image.at(tv.id));
      if (img == step.bonding.end()) {
        issues.push_back({"BondingFailure", entry.cell + "/" + tv.id, "no bonding image"});
        continue;
      }
      const SubdivisionPoint expected = push_subdivision_point(
          prod.map.at(tv.id), entry.bottom.vertex_image, entry.bottom.edge_image);
      if (img->second != expected) {
        issues.push_back({"BondingFailure", entry.cell + "/" + tv.id,
                          "bonding sends chart image to " +
                              subdivision_point_to_string(img->second) + ", decomposition needs " +
                              subdivision_point_to_string(expected)});
      }
    }
  }

  // The bonding map itself must be a valid (quasi-)simplicial vertex map.
  {
    MapClassification cls = classify_map(next, base, step.bonding);
    if (!cls.valid) {
      issues.push_back({"BondingFailure", "", "bonding map has invalid edge images"});
      issues.insert(issues.end(), cls.issues.begin(), cls.issues.end());
    }
  }

  return issues;
}

std::vector<Issue> verify_expansion(const MarkovDiagram& d, const Expansion& levels) {
  std::vector<Issue> issues;
  for (std::size_t i = 1; i < levels.size(); ++i) {
    auto step_issues =
        verify_decomposition(d, levels[i - 1].graph, levels[i].graph, *levels[i].step);
    for (auto issue : step_issues) {
      issue.subject = "level " + std::to_string(levels[i].index) + "/" + issue.subject;
      issues.push_back(std::move(issue));
    }
  }
  return issues;
}

}  // namespace markov
