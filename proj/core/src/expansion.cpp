#include "markov/expansion.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "markov/union_find.hpp"

namespace markov {

const ChartEntry* Chart::find(const std::string& cell) const {
  for (const auto& e : entries) {
    if (e.cell == cell) return &e;
  }
  return nullptr;
}

CellAssignment assign_productions(const ColoredGraph& level, const DiagramReport& report) {
  if (!report.expandable()) {
    throw std::invalid_argument("diagram is not expandable (validate first)");
  }
  CellAssignment out;
  for (const auto& v : level.vertices()) {
    const VertexRule* rule = report.vertex_rule(v.color);
    if (rule == nullptr) {
      throw std::logic_error("no vertex production for color " + std::to_string(v.color));
    }
    out.vertex_production[v.id] = rule->production;
  }
  for (const auto& e : level.edges()) {
    const Color c0 = level.find_vertex(e.ends[0])->color;
    const Color c1 = level.find_vertex(e.ends[1])->color;
    const EdgeRule* rule = report.edge_rule(e.color, c0, c1);
    if (rule == nullptr) {
      throw std::logic_error("no edge production for edge '" + e.id + "'");
    }
    CellAssignment::EdgeAssign a;
    a.production = rule->production;
    if (rule->tail_color != rule->head_color) {
      // Colors force the orientation.
      a.tail = c0 == rule->tail_color ? e.ends[0] : e.ends[1];
      a.head = c0 == rule->tail_color ? e.ends[1] : e.ends[0];
    } else {
      a.tail = std::min(e.ends[0], e.ends[1]);
      a.head = std::max(e.ends[0], e.ends[1]);
    }
    out.edge_production[e.id] = a;
  }
  return out;
}

namespace {

// Per-production index layout, so the identification loop runs on dense
// integers instead of address strings.
struct ProductionLayout {
  const Production* prod = nullptr;
  std::map<std::string, int> vertex_pos;
  std::map<std::string, int> edge_pos;
  std::vector<Color> vertex_color;              // by position
  std::vector<Color> edge_color;                // by position
  std::vector<std::pair<int, int>> edge_ends;   // by position, endpoint positions
  std::vector<SubdivisionPoint> bottom_target;  // by vertex position, into b(prod)
};

ProductionLayout make_layout(const Production& prod) {
  ProductionLayout layout;
  layout.prod = &prod;
  for (const auto& v : prod.top.vertices()) {
    layout.vertex_pos.emplace(v.id, static_cast<int>(layout.vertex_color.size()));
    layout.vertex_color.push_back(v.color);
    layout.bottom_target.push_back(prod.map.at(v.id));
  }
  for (const auto& e : prod.top.edges()) {
    layout.edge_pos.emplace(e.id, static_cast<int>(layout.edge_color.size()));
    layout.edge_color.push_back(e.color);
    layout.edge_ends.emplace_back(layout.vertex_pos.at(e.ends[0]),
                                  layout.vertex_pos.at(e.ends[1]));
  }
  return layout;
}

// Gluing resolved against two layouts: position pairs to unite.
struct GluingLayout {
  std::vector<std::pair<int, int>> vertex_pairs;  // (src top pos, dst top pos)
  std::vector<std::pair<int, int>> edge_pairs;
};

struct Instance {
  const std::string* cell = nullptr;  // owning cell of the base level
  bool is_edge = false;
  const ProductionLayout* layout = nullptr;
  int vertex_base = 0;
  int edge_base = 0;
  // For edge instances: the resolved (tail, head) base vertices; for vertex
  // instances tail names the cell itself.
  const std::string* tail = nullptr;
  const std::string* head = nullptr;
};

}  // namespace

ExpandResult expand_once(const MarkovDiagram& d, const DiagramReport& report,
                         const LevelState& current) {
  ExpandResult result;
  const ColoredGraph& level = current.graph;
  const CellAssignment assignment = assign_productions(level, report);

  std::unordered_map<std::string, ProductionLayout> layouts;
  for (const auto& p : d.productions) layouts.emplace(p.name, make_layout(p));

  std::unordered_map<std::string, GluingLayout> gluing_layouts;
  for (const auto& g : d.gluings) {
    const GluingVerdict* verdict = report.gluing_verdict(g.name);
    const ProductionLayout& src = layouts.at(g.src);
    const ProductionLayout& dst = layouts.at(g.dst);
    GluingLayout gl;
    for (const auto& [from, to] : g.top_map) {
      gl.vertex_pairs.emplace_back(src.vertex_pos.at(from), dst.vertex_pos.at(to));
    }
    for (const auto& [from, to] : verdict->top_edge_image) {
      gl.edge_pairs.emplace_back(src.edge_pos.at(from), dst.edge_pos.at(to));
    }
    gluing_layouts.emplace(g.name, std::move(gl));
  }

  // Lay instances out in deterministic cell order: all vertices, then all
  // edges (both already sorted by id).
  std::vector<Instance> instances;
  std::unordered_map<std::string, int> instance_of_vertex_cell;
  int total_vertices = 0;
  int total_edges = 0;
  for (const auto& v : level.vertices()) {
    Instance inst;
    inst.cell = &v.id;
    inst.is_edge = false;
    inst.layout = &layouts.at(assignment.vertex_production.at(v.id));
    inst.vertex_base = total_vertices;
    inst.edge_base = total_edges;
    total_vertices += static_cast<int>(inst.layout->vertex_color.size());
    total_edges += static_cast<int>(inst.layout->edge_color.size());
    instance_of_vertex_cell.emplace(v.id, static_cast<int>(instances.size()));
    instances.push_back(inst);
  }
  for (const auto& e : level.edges()) {
    const auto& assign = assignment.edge_production.at(e.id);
    Instance inst;
    inst.cell = &e.id;
    inst.is_edge = true;
    inst.layout = &layouts.at(assign.production);
    inst.vertex_base = total_vertices;
    inst.edge_base = total_edges;
    inst.tail = &assign.tail;
    inst.head = &assign.head;
    total_vertices += static_cast<int>(inst.layout->vertex_color.size());
    total_edges += static_cast<int>(inst.layout->edge_color.size());
    instances.push_back(inst);
  }

  // Raw addresses, built exactly once per instance cell.
  std::vector<std::string> vertex_raw(total_vertices);
  std::vector<std::string> edge_raw(total_edges);
  for (const auto& inst : instances) {
    const std::string prefix = *inst.cell + "|" + inst.layout->prod->name + "|";
    for (const auto& [id, pos] : inst.layout->vertex_pos) vertex_raw[inst.vertex_base + pos] = prefix + id;
    for (const auto& [id, pos] : inst.layout->edge_pos) edge_raw[inst.edge_base + pos] = prefix + id;
  }

  // Identify glued cells. These are the only identifications ever made.
  UnionFind vertex_uf(total_vertices);
  UnionFind edge_uf(total_edges);
  const std::size_t first_edge_instance = level.vertex_count();
  for (std::size_t i = first_edge_instance; i < instances.size(); ++i) {
    const Instance& edge_inst = instances[i];
    const Edge* base_edge = level.find_edge(*edge_inst.cell);
    const Color c0 = level.find_vertex(*edge_inst.tail)->color;
    const Color c1 = level.find_vertex(*edge_inst.head)->color;
    const EdgeRule* rule = report.edge_rule(base_edge->color, c0, c1);
    for (EndpointRole role : {EndpointRole::Tail, EndpointRole::Head}) {
      const std::string& vertex_cell =
          role == EndpointRole::Tail ? *edge_inst.tail : *edge_inst.head;
      const std::string& gluing_name =
          role == EndpointRole::Tail ? rule->tail_gluing : rule->head_gluing;
      const Instance& vertex_inst = instances[instance_of_vertex_cell.at(vertex_cell)];
      const GluingLayout& gl = gluing_layouts.at(gluing_name);
      for (const auto& [src_pos, dst_pos] : gl.vertex_pairs) {
        vertex_uf.unite(vertex_inst.vertex_base + src_pos, edge_inst.vertex_base + dst_pos);
      }
      for (const auto& [src_pos, dst_pos] : gl.edge_pairs) {
        edge_uf.unite(vertex_inst.edge_base + src_pos, edge_inst.edge_base + dst_pos);
      }
    }
  }

  // Canonical representative: the lexicographically least raw address of the
  // class (independent of union order, hence reproducible).
  auto least_of = [](UnionFind& uf, const std::vector<std::string>& raw) {
    std::vector<int> least(raw.size(), -1);
    for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
      const int r = uf.root(i);
      if (least[r] < 0 || raw[i] < raw[least[r]]) least[r] = i;
    }
    return least;
  };
  const std::vector<int> vertex_least = least_of(vertex_uf, vertex_raw);
  const std::vector<int> edge_least = least_of(edge_uf, edge_raw);
  auto canon_vertex = [&](int i) -> const std::string& {
    return vertex_raw[vertex_least[vertex_uf.root(i)]];
  };
  auto canon_edge = [&](int i) -> const std::string& {
    return edge_raw[edge_least[edge_uf.root(i)]];
  };

  // Colors and bonding images per raw vertex; all members of a class must
  // agree or the diagram merged cells it should not have.
  std::vector<Color> raw_color(total_vertices);
  std::vector<SubdivisionPoint> raw_bonding(total_vertices);
  for (const auto& inst : instances) {
    const auto& layout = *inst.layout;
    for (std::size_t pos = 0; pos < layout.vertex_color.size(); ++pos) {
      const int index = inst.vertex_base + static_cast<int>(pos);
      raw_color[index] = layout.vertex_color[pos];
      const SubdivisionPoint& target = layout.bottom_target[pos];
      if (!inst.is_edge) {
        raw_bonding[index] = at_vertex(*inst.cell);
      } else if (target.kind == SubdivisionPoint::Kind::Barycenter) {
        raw_bonding[index] = at_barycenter(*inst.cell);
      } else {
        const Edge& bottom_edge = layout.prod->bottom.edges()[0];
        raw_bonding[index] =
            at_vertex(target.id == bottom_edge.ends[0] ? *inst.tail : *inst.head);
      }
    }
  }

  std::vector<Vertex> next_vertices;
  {
    std::vector<char> seen(total_vertices, 0);
    for (int i = 0; i < total_vertices; ++i) {
      const int r = vertex_uf.root(i);
      if (!seen[r]) {
        seen[r] = 1;
        next_vertices.push_back({vertex_raw[vertex_least[r]], raw_color[i]});
      } else {
        const int rep = vertex_least[r];
        if (raw_color[i] != raw_color[rep] || !(raw_bonding[i] == raw_bonding[rep])) {
          result.issues.push_back({"UnintendedCollision", vertex_raw[rep],
                                   "identified cells disagree on color or bonding image "
                                   "(member " +
                                       vertex_raw[i] + ")"});
        }
      }
    }
  }

  struct EdgeClass {
    int end0 = 0, end1 = 0;  // vertex roots
    Color color = 0;
    int rep = -1;  // representative raw index
  };
  std::vector<EdgeClass> edge_classes;
  {
    std::vector<int> class_of(total_edges, -1);
    for (const auto& inst : instances) {
      const auto& layout = *inst.layout;
      for (std::size_t pos = 0; pos < layout.edge_color.size(); ++pos) {
        const int index = inst.edge_base + static_cast<int>(pos);
        int e0 = vertex_uf.root(inst.vertex_base + layout.edge_ends[pos].first);
        int e1 = vertex_uf.root(inst.vertex_base + layout.edge_ends[pos].second);
        if (canon_vertex(e1) < canon_vertex(e0)) std::swap(e0, e1);
        const int r = edge_uf.root(index);
        if (class_of[r] < 0) {
          class_of[r] = static_cast<int>(edge_classes.size());
          edge_classes.push_back({e0, e1, layout.edge_color[pos], edge_least[r]});
          if (e0 == e1) {
            result.issues.push_back(
                {"UnintendedCollision", edge_raw[index], "edge endpoints were identified"});
          }
        } else {
          const EdgeClass& existing = edge_classes[class_of[r]];
          if (existing.end0 != e0 || existing.end1 != e1 || existing.color != layout.edge_color[pos]) {
            result.issues.push_back({"UnintendedCollision", edge_raw[existing.rep],
                                     "identified edges disagree on endpoints or color (member " +
                                         edge_raw[index] + ")"});
          }
        }
      }
    }
    // Distinct classes sharing an endpoint pair would be a multi-edge.
    std::unordered_map<long long, int> by_ends;
    for (std::size_t c = 0; c < edge_classes.size(); ++c) {
      const long long key = static_cast<long long>(edge_classes[c].end0) *
                                static_cast<long long>(total_vertices + 1) +
                            edge_classes[c].end1;
      auto [it, inserted] = by_ends.emplace(key, static_cast<int>(c));
      if (!inserted) {
        result.issues.push_back({"UnintendedCollision", edge_raw[edge_classes[c].rep],
                                 "parallel to '" + edge_raw[edge_classes[it->second].rep] +
                                     "' after identification"});
      }
    }
  }
  if (!result.issues.empty()) {
    std::sort(result.issues.begin(), result.issues.end(),
              [](const Issue& a, const Issue& b) { return a.subject < b.subject; });
    return result;
  }

  std::vector<Edge> next_edges;
  next_edges.reserve(edge_classes.size());
  for (const auto& c : edge_classes) {
    next_edges.push_back({edge_raw[c.rep],
                          {vertex_raw[vertex_least[c.end0]], vertex_raw[vertex_least[c.end1]]},
                          c.color});
  }

  LevelState next;
  next.index = current.index + 1;
  next.graph = ColoredGraph(std::move(next_vertices), std::move(next_edges));

  DecompositionStep step;
  for (int i = 0; i < total_vertices; ++i) {
    if (vertex_least[vertex_uf.root(i)] == i) {
      step.bonding.emplace(vertex_raw[i], raw_bonding[i]);
    }
  }

  // Charts and the assembly graph, in instance order (already cell-sorted
  // within each kind; entries get re-sorted below).
  for (const auto& inst : instances) {
    const auto& layout = *inst.layout;
    ChartEntry entry;
    entry.cell = *inst.cell;
    entry.is_edge = inst.is_edge;
    for (const auto& [id, pos] : layout.vertex_pos) {
      entry.top.vertex_image[id] = canon_vertex(inst.vertex_base + pos);
    }
    for (const auto& [id, pos] : layout.edge_pos) {
      entry.top.edge_image[id] = canon_edge(inst.edge_base + pos);
    }
    if (!inst.is_edge) {
      entry.bottom.vertex_image[layout.prod->bottom.vertices()[0].id] = *inst.cell;
    } else {
      const Edge& be = layout.prod->bottom.edges()[0];
      entry.bottom.vertex_image[be.ends[0]] = *inst.tail;
      entry.bottom.vertex_image[be.ends[1]] = *inst.head;
      entry.bottom.edge_image[be.id] = *inst.cell;
    }
    step.chart.entries.push_back(std::move(entry));
    step.assembly.nodes.push_back({*inst.cell, inst.is_edge, layout.prod->name});
  }
  for (const auto& e : level.edges()) {
    const auto& assign = assignment.edge_production.at(e.id);
    const Color c0 = level.find_vertex(assign.tail)->color;
    const Color c1 = level.find_vertex(assign.head)->color;
    const EdgeRule* rule = report.edge_rule(e.color, c0, c1);
    step.assembly.arcs.push_back({assign.tail, e.id, EndpointRole::Tail, rule->tail_gluing});
    step.assembly.arcs.push_back({assign.head, e.id, EndpointRole::Head, rule->head_gluing});
  }

  std::sort(step.chart.entries.begin(), step.chart.entries.end(),
            [](const ChartEntry& a, const ChartEntry& b) { return a.cell < b.cell; });
  std::sort(step.assembly.nodes.begin(), step.assembly.nodes.end(),
            [](const AssemblyNode& a, const AssemblyNode& b) { return a.cell < b.cell; });
  std::sort(step.assembly.arcs.begin(), step.assembly.arcs.end(),
            [](const AssemblyArc& a, const AssemblyArc& b) {
              return std::pair{a.edge_cell, a.role == EndpointRole::Head} <
                     std::pair{b.edge_cell, b.role == EndpointRole::Head};
            });

  next.step = std::move(step);
  result.levels.push_back(std::move(next));
  return result;
}

ExpandResult expand(const MarkovDiagram& d, const DiagramReport& report, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  ExpandResult result;
  if (!report.expandable()) {
    result.issues.push_back({"NotExpandable", d.name,
                             "diagram must validate, be elementary, and have complete coverage"});
    auto issues = report.all_issues();
    result.issues.insert(result.issues.end(), issues.begin(), issues.end());
    return result;
  }

  result.levels.push_back({1, d.start, std::nullopt});
  for (int i = 1; i < depth; ++i) {
    ExpandResult step = expand_once(d, report, result.levels.back());
    if (!step.ok()) {
      result.issues = std::move(step.issues);
      return result;
    }
    result.levels.push_back(std::move(step.levels.front()));
  }
  return result;
}

ExpandResult expand(const MarkovDiagram& d, int depth) {
  return expand(d, validate_diagram(d), depth);
}

}  // namespace markov
