#include "markov/diagram_validate.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace markov {

namespace {

std::pair<Color, Color> minmax_colors(Color a, Color b) {
  return a <= b ? std::pair{a, b} : std::pair{b, a};
}

void collect_graph_issues(const ColoredGraph& g, const std::string& owner,
                          std::vector<Issue>& sink) {
  for (auto issue : validate_graph(g)) {
    issue.subject = owner + "/" + issue.subject;
    sink.push_back(std::move(issue));
  }
}

void check_palette(const ColoredGraph& g, const std::string& owner,
                   const std::map<Color, std::string>& palette, std::vector<Issue>& sink) {
  for (const auto& v : g.vertices()) {
    if (palette.count(v.color) == 0) {
      sink.push_back({"ColorNotInPalette", owner + "/" + v.id,
                      "vertex color " + std::to_string(v.color) + " not declared"});
    }
  }
  for (const auto& e : g.edges()) {
    if (palette.count(e.color) == 0) {
      sink.push_back({"ColorNotInPalette", owner + "/" + e.id,
                      "edge color " + std::to_string(e.color) + " not declared"});
    }
  }
}

}  // namespace

bool DiagramReport::valid() const {
  if (!structural_issues.empty()) return false;
  for (const auto& p : productions) {
    if (!p.ok) return false;
  }
  for (const auto& g : gluings) {
    if (!g.ok) return false;
  }
  return true;
}

bool DiagramReport::expandable() const { return valid() && elementary && coverage_complete; }

std::vector<Issue> DiagramReport::all_issues() const {
  std::vector<Issue> out = structural_issues;
  for (const auto& p : productions) out.insert(out.end(), p.issues.begin(), p.issues.end());
  for (const auto& g : gluings) out.insert(out.end(), g.issues.begin(), g.issues.end());
  out.insert(out.end(), coverage_issues.begin(), coverage_issues.end());
  return out;
}

const VertexRule* DiagramReport::vertex_rule(Color c) const {
  for (const auto& r : vertex_rules) {
    if (r.color == c) return &r;
  }
  return nullptr;
}

const EdgeRule* DiagramReport::edge_rule(Color edge_color, Color end_a, Color end_b) const {
  auto key = minmax_colors(end_a, end_b);
  for (const auto& r : edge_rules) {
    if (r.edge_color == edge_color && minmax_colors(r.tail_color, r.head_color) == key) return &r;
  }
  return nullptr;
}

const ProductionVerdict* DiagramReport::production_verdict(const std::string& name) const {
  for (const auto& p : productions) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

const GluingVerdict* DiagramReport::gluing_verdict(const std::string& name) const {
  for (const auto& g : gluings) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

ProductionVerdict validate_production(const Production& p) {
  ProductionVerdict out;
  out.name = p.name;

  collect_graph_issues(p.top, "top", out.issues);
  collect_graph_issues(p.bottom, "bottom", out.issues);
  if (!out.issues.empty()) return out;

  if (p.top.vertex_count() == 0) {
    out.issues.push_back({"EmptyTop", p.name, "production top has no vertices"});
  }
  if (p.bottom.vertex_count() == 0) {
    out.issues.push_back({"UnsupportedBottom", p.name, "production bottom has no vertices"});
  }
  if (!out.issues.empty()) return out;

  out.kind = production_kind(p);
  out.classification = classify_map(p.top, p.bottom, p.map);
  if (!out.classification.valid) {
    out.issues.push_back({"InvalidMap", p.name, "production map is not valid"});
    out.issues.insert(out.issues.end(), out.classification.issues.begin(),
                      out.classification.issues.end());
  } else if (!out.classification.simplicial && !out.classification.quasi_simplicial) {
    out.issues.push_back({"InvalidMap", p.name,
                          "map mixes full-edge images with barycenter targets; it is neither "
                          "simplicial nor quasi-simplicial"});
  }

  out.ok = out.issues.empty();
  return out;
}

GluingVerdict validate_gluing(const Gluing& g, const MarkovDiagram& diagram) {
  GluingVerdict out;
  out.name = g.name;

  const Production* src = diagram.find_production(g.src);
  const Production* dst = diagram.find_production(g.dst);
  if (src == nullptr) out.issues.push_back({"UnknownReference", g.name, "src '" + g.src + "'"});
  if (dst == nullptr) out.issues.push_back({"UnknownReference", g.name, "dst '" + g.dst + "'"});
  if (!out.issues.empty()) return out;

  EmbeddingCheck top = check_colored_embedding(src->top, dst->top, g.top_map);
  for (auto issue : top.issues) {
    issue.subject = "top_map/" + issue.subject;
    out.issues.push_back(std::move(issue));
  }
  EmbeddingCheck bottom = check_colored_embedding(src->bottom, dst->bottom, g.bottom_map);
  for (auto issue : bottom.issues) {
    issue.subject = "bottom_map/" + issue.subject;
    out.issues.push_back(std::move(issue));
  }
  if (!out.issues.empty()) return out;

  // Square dst_map(top_map(x)) == bottom_map(src_map(x)), pointwise on every
  // vertex of t(src), with bottom barycenters pushed through the induced
  // edge map of bottom_map.
  for (const auto& v : src->top.vertices()) {
    const SubdivisionPoint lhs = dst->map.at(g.top_map.at(v.id));
    const SubdivisionPoint rhs =
        push_subdivision_point(src->map.at(v.id), g.bottom_map, bottom.edge_image);
    if (lhs != rhs) {
      out.issues.push_back({"CommutativityFailure", v.id,
                            "via top: " + subdivision_point_to_string(lhs) +
                                ", via bottom: " + subdivision_point_to_string(rhs)});
    }
  }

  out.ok = out.issues.empty();
  if (out.ok) {
    out.top_edge_image = std::move(top.edge_image);
    out.bottom_edge_image = std::move(bottom.edge_image);
  }
  return out;
}

bool check_elementary(const MarkovDiagram& d) {
  for (const auto& p : d.productions) {
    if (production_kind(p) != ProductionKind::Vertex && production_kind(p) != ProductionKind::Edge) {
      return false;
    }
  }
  return true;
}

namespace {

// Signature coverage: every vertex color and every (edge color, end colors)
// signature that can occur at any level — i.e. appears in the start graph or
// in any production top — must be matched by exactly one production, and
// every (vertex production, edge production, role) adjacency demanded by the
// matched signatures by exactly one gluing.
void run_coverage(const MarkovDiagram& d, DiagramReport& report) {
  std::set<Color> vertex_signatures;
  std::set<std::tuple<Color, Color, Color>> edge_signatures;  // edge color, min end, max end

  auto scan = [&](const ColoredGraph& g) {
    for (const auto& v : g.vertices()) vertex_signatures.insert(v.color);
    for (const auto& e : g.edges()) {
      const Color a = g.find_vertex(e.ends[0])->color;
      const Color b = g.find_vertex(e.ends[1])->color;
      auto [lo, hi] = minmax_colors(a, b);
      edge_signatures.insert({e.color, lo, hi});
    }
  };
  scan(d.start);
  for (const auto& p : d.productions) scan(p.top);

  for (Color c : vertex_signatures) {
    std::vector<const Production*> matches;
    for (const auto& p : d.productions) {
      if (production_kind(p) == ProductionKind::Vertex && p.bottom.vertices()[0].color == c) {
        matches.push_back(&p);
      }
    }
    const std::string subject = "vertex color " + std::to_string(c);
    if (matches.empty()) {
      report.coverage_issues.push_back({"MissingProduction", subject, ""});
    } else if (matches.size() > 1) {
      report.coverage_issues.push_back(
          {"AmbiguousProduction", subject,
           matches[0]->name + " and " + matches[1]->name + " both match"});
    } else {
      report.vertex_rules.push_back({c, matches[0]->name});
    }
  }

  for (const auto& [edge_color, lo, hi] : edge_signatures) {
    std::vector<const Production*> matches;
    for (const auto& p : d.productions) {
      if (production_kind(p) != ProductionKind::Edge) continue;
      const Edge& be = p.bottom.edges()[0];
      if (be.color != edge_color) continue;
      const Color bt = p.bottom.find_vertex(be.ends[0])->color;
      const Color bh = p.bottom.find_vertex(be.ends[1])->color;
      if (minmax_colors(bt, bh) == std::pair{lo, hi}) matches.push_back(&p);
    }
    const std::string subject = "edge color " + std::to_string(edge_color) + " ends (" +
                                std::to_string(lo) + "," + std::to_string(hi) + ")";
    if (matches.empty()) {
      report.coverage_issues.push_back({"MissingProduction", subject, ""});
      continue;
    }
    if (matches.size() > 1) {
      report.coverage_issues.push_back(
          {"AmbiguousProduction", subject,
           matches[0]->name + " and " + matches[1]->name + " both match"});
      continue;
    }

    const Production* ep = matches[0];
    const Edge& be = ep->bottom.edges()[0];
    EdgeRule rule;
    rule.edge_color = edge_color;
    rule.tail_color = ep->bottom.find_vertex(be.ends[0])->color;
    rule.head_color = ep->bottom.find_vertex(be.ends[1])->color;
    rule.production = ep->name;

    // One gluing per endpoint role, from the vertex production of that
    // endpoint's color, whose bottom map hits that endpoint.
    bool roles_ok = true;
    for (int role = 0; role < 2; ++role) {
      const Color end_color = role == 0 ? rule.tail_color : rule.head_color;
      const std::string role_name = role == 0 ? "tail" : "head";
      const VertexRule* vr = nullptr;
      for (const auto& r : report.vertex_rules) {
        if (r.color == end_color) vr = &r;
      }
      if (vr == nullptr) {
        roles_ok = false;  // already reported as a missing vertex production
        continue;
      }
      const Production* vp = d.find_production(vr->production);
      std::vector<const Gluing*> found;
      for (const auto& g : d.gluings) {
        if (g.src != vp->name || g.dst != ep->name) continue;
        auto it = g.bottom_map.find(vp->bottom.vertices()[0].id);
        if (it != g.bottom_map.end() && it->second == be.ends[role]) found.push_back(&g);
      }
      const std::string gl_subject = vp->name + "->" + ep->name + "@" + role_name;
      if (found.empty()) {
        report.coverage_issues.push_back({"MissingGluing", gl_subject, ""});
        roles_ok = false;
      } else if (found.size() > 1) {
        report.coverage_issues.push_back(
            {"AmbiguousGluing", gl_subject, found[0]->name + " and " + found[1]->name});
        roles_ok = false;
      } else {
        (role == 0 ? rule.tail_gluing : rule.head_gluing) = found[0]->name;
      }
    }
    if (roles_ok) report.edge_rules.push_back(rule);
  }

  std::sort(report.vertex_rules.begin(), report.vertex_rules.end(),
            [](const VertexRule& a, const VertexRule& b) { return a.color < b.color; });
  std::sort(report.edge_rules.begin(), report.edge_rules.end(), [](const EdgeRule& a, const EdgeRule& b) {
    return std::tuple{a.edge_color, a.tail_color, a.head_color} <
           std::tuple{b.edge_color, b.tail_color, b.head_color};
  });
  report.coverage_complete = report.coverage_issues.empty();
}

}  // namespace

DiagramReport validate_diagram(const MarkovDiagram& d) {
  DiagramReport report;

  collect_graph_issues(d.start, "start", report.structural_issues);
  check_palette(d.start, "start", d.palette, report.structural_issues);

  std::set<std::string> production_names;
  for (const auto& p : d.productions) {
    if (!production_names.insert(p.name).second) {
      report.structural_issues.push_back({"DuplicateName", p.name, "duplicate production name"});
    }
    collect_graph_issues(p.top, p.name + "/top", report.structural_issues);
    collect_graph_issues(p.bottom, p.name + "/bottom", report.structural_issues);
    check_palette(p.top, p.name + "/top", d.palette, report.structural_issues);
    check_palette(p.bottom, p.name + "/bottom", d.palette, report.structural_issues);
  }
  std::set<std::string> gluing_names;
  for (const auto& g : d.gluings) {
    if (!gluing_names.insert(g.name).second) {
      report.structural_issues.push_back({"DuplicateName", g.name, "duplicate gluing name"});
    }
  }

  for (const auto& p : d.productions) report.productions.push_back(validate_production(p));
  for (const auto& g : d.gluings) report.gluings.push_back(validate_gluing(g, d));
  std::sort(report.productions.begin(), report.productions.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  std::sort(report.gluings.begin(), report.gluings.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });

  report.elementary = check_elementary(d);
  if (report.valid() && report.elementary) {
    run_coverage(d, report);
  }
  return report;
}

}  // namespace markov
