#include "markov/limit_metrics.hpp"

#include <algorithm>
#include <stdexcept>

#include "markov/graph_algorithms.hpp"
#include "markov/subdivision.hpp"

namespace markov {

MetricSchedule MetricSchedule::halving(Rational kappa1) {
  return {Rule::Halving, kappa1, {}};
}
MetricSchedule MetricSchedule::constant(Rational kappa1) {
  return {Rule::Constant, kappa1, {}};
}
MetricSchedule MetricSchedule::custom_list(std::vector<Rational> values) {
  MetricSchedule s;
  s.rule = Rule::Custom;
  s.kappa1 = values.empty() ? Rational(1) : values.front();
  s.custom = std::move(values);
  return s;
}

Rational MetricSchedule::kappa_at(int level) const {
  if (level < 1) throw std::out_of_range("levels are 1-based");
  switch (rule) {
    case Rule::Constant:
      return kappa1;
    case Rule::Halving: {
      Rational k = kappa1;
      for (int i = 1; i < level; ++i) k /= 2;
      return k;
    }
    case Rule::Custom: {
      if (custom.empty()) return kappa1;
      const std::size_t idx = std::min<std::size_t>(level - 1, custom.size() - 1);
      return custom[idx];
    }
  }
  return kappa1;
}

std::optional<Rational> MetricSchedule::kappa_tail(int level) const {
  // sum_{j > level} kappa_j. Halving is exactly geometric: the tail equals
  // kappa_level. Constant (and custom, which repeats its last value) has no
  // finite tail.
  if (rule == Rule::Halving) return kappa_at(level);
  return std::nullopt;
}

int max_top_diameter(const MarkovDiagram& d) {
  int best = 0;
  for (const auto& p : d.productions) best = std::max(best, graph_diameter(p.top));
  return best;
}

std::vector<std::size_t> component_counts(const Expansion& levels) {
  std::vector<std::size_t> out;
  for (const auto& level : levels) out.push_back(connected_components(level.graph).size());
  return out;
}

Rational mesh_bound(const Expansion& levels, const MetricSchedule& schedule, int level) {
  if (level < 1 || static_cast<std::size_t>(level + 1) > levels.size()) {
    throw std::out_of_range("mesh bound needs level and level+1 expanded");
  }
  const ColoredGraph& next = levels[level].graph;
  const DecompositionStep& step = *levels[level].step;

  int max_diameter = 0;
  for (const auto& entry : step.chart.entries) {
    std::vector<std::string> image;
    for (const auto& [_, img] : entry.top.vertex_image) image.push_back(img);
    for (const auto& source : image) {
      const auto dist = bfs_distances(next, source);
      for (const auto& target : image) {
        max_diameter = std::max(max_diameter, dist.at(target));
      }
    }
  }
  return schedule.kappa_at(level) * max_diameter;
}

std::optional<Rational> mesh_tail(const MarkovDiagram& d, const MetricSchedule& schedule,
                                  int level) {
  const auto tail = schedule.kappa_tail(level);
  if (!tail) return std::nullopt;
  return *tail * max_top_diameter(d);
}

LipschitzReport check_lipschitz(const Expansion& levels, const MetricSchedule& schedule,
                                std::size_t max_reported) {
  LipschitzReport report;
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const int base_level = static_cast<int>(i);  // bonding K_{i+1} -> K_i
    const ColoredGraph& upper = levels[i].graph;
    const ColoredGraph& lower = levels[i - 1].graph;
    const auto& bonding = levels[i].step->bonding;
    const Subdivision beta = barycentric_subdivide(lower);

    // Images in beta(K_i), by vertex of K_{i+1}.
    std::map<std::string, std::string> image;
    for (const auto& v : upper.vertices()) {
      image[v.id] = beta.vertex_id_of(bonding.at(v.id));
    }
    // Distance tables from every used image vertex.
    std::map<std::string, std::map<std::string, int>> beta_dist;
    for (const auto& [_, img] : image) {
      if (beta_dist.count(img) == 0) beta_dist.emplace(img, bfs_distances(beta.graph, img));
    }

    const Rational half_kappa = schedule.kappa_at(base_level) / 2;
    const Rational kappa_up = schedule.kappa_at(base_level + 1);

    const auto& vertices = upper.vertices();
    for (std::size_t a = 0; a < vertices.size(); ++a) {
      const auto dist_up = bfs_distances(upper, vertices[a].id);
      const auto& from_image = beta_dist.at(image.at(vertices[a].id));
      for (std::size_t b = a + 1; b < vertices.size(); ++b) {
        ++report.pairs_checked;
        const int d_up = dist_up.at(vertices[b].id);
        if (d_up < 0) continue;  // infinite upstairs bounds everything
        const int d_img = from_image.at(image.at(vertices[b].id));
        const Rational lhs = d_img < 0 ? Rational(-1) : half_kappa * d_img;
        if (d_img < 0 || lhs > kappa_up * d_up) {
          ++report.violation_count;
          if (report.violations.size() < max_reported) {
            report.violations.push_back({base_level, vertices[a].id, vertices[b].id,
                                         d_img < 0 ? Rational(-1) : lhs, kappa_up * d_up});
          }
        }
      }
    }
  }
  report.pass = report.violation_count == 0;
  return report;
}

namespace {

// Minimal carrier cell of the image of `entry` under the bonding map into
// the previous level.
ThreadEntry carrier_below(const Expansion& levels, int level, const ThreadEntry& entry) {
  const auto& bonding = levels[level - 1].step->bonding;  // p : K_level -> K_{level-1}
  const ColoredGraph& upper = levels[level - 1].graph;

  auto of_point = [](const SubdivisionPoint& p) {
    return ThreadEntry{p.kind == SubdivisionPoint::Kind::Barycenter, p.id};
  };
  if (!entry.is_edge) return of_point(bonding.at(entry.cell));

  const Edge* e = upper.find_edge(entry.cell);
  if (e == nullptr) throw std::out_of_range("thread edge '" + entry.cell + "' not in level");
  const SubdivisionPoint a = bonding.at(e->ends[0]);
  const SubdivisionPoint b = bonding.at(e->ends[1]);
  if (a == b) return of_point(a);
  if (a.kind == SubdivisionPoint::Kind::Barycenter && b.kind == SubdivisionPoint::Kind::Barycenter) {
    throw std::logic_error("edge image spans two barycenters");
  }
  if (a.kind == SubdivisionPoint::Kind::Barycenter) return {true, a.id};
  if (b.kind == SubdivisionPoint::Kind::Barycenter) return {true, b.id};
  // Full edge image: the carrier is the edge between the two image vertices.
  const ColoredGraph& lower = levels[level - 2].graph;
  const Edge* img = lower.find_edge_between(a.id, b.id);
  if (img == nullptr) throw std::logic_error("edge image is not a simplex");
  return {true, img->id};
}

}  // namespace

ThreadEnumeration enumerate_threads(const Expansion& levels, int depth, std::size_t limit) {
  if (depth < 1 || static_cast<std::size_t>(depth) > levels.size()) {
    throw std::out_of_range("depth outside the expansion");
  }
  ThreadEnumeration out;
  for (const auto& v : levels[depth - 1].graph.vertices()) {
    if (out.threads.size() == limit) {
      out.truncated = true;
      break;
    }
    Thread t;
    t.cells.assign(depth, ThreadEntry{});
    t.cells[depth - 1] = {false, v.id};
    for (int level = depth; level > 1; --level) {
      t.cells[level - 2] = carrier_below(levels, level, t.cells[level - 1]);
    }
    out.threads.push_back(std::move(t));
  }
  return out;
}

std::vector<Issue> verify_thread(const Expansion& levels, const Thread& t) {
  std::vector<Issue> issues;
  if (t.cells.empty() || t.cells.size() > levels.size()) {
    issues.push_back({"ThreadInvalid", "", "thread depth outside the expansion"});
    return issues;
  }
  for (std::size_t i = 0; i < t.cells.size(); ++i) {
    const ColoredGraph& g = levels[i].graph;
    const auto& cell = t.cells[i];
    const bool exists = cell.is_edge ? g.has_edge(cell.cell) : g.has_vertex(cell.cell);
    if (!exists) {
      issues.push_back({"ThreadInvalid", cell.cell,
                        "cell missing at level " + std::to_string(i + 1)});
      return issues;
    }
  }
  for (std::size_t i = t.cells.size(); i > 1; --i) {
    const ThreadEntry carrier = carrier_below(levels, static_cast<int>(i), t.cells[i - 1]);
    const ThreadEntry& declared = t.cells[i - 2];
    bool compatible = carrier == declared;
    if (!compatible && !carrier.is_edge && declared.is_edge) {
      // A vertex image also lies inside any declared edge having it as an end.
      const Edge* e = levels[i - 2].graph.find_edge(declared.cell);
      compatible = e != nullptr && (e->ends[0] == carrier.cell || e->ends[1] == carrier.cell);
    }
    if (!compatible) {
      issues.push_back({"ThreadIncompatible", declared.cell,
                        "level " + std::to_string(i) + " maps into '" + carrier.cell +
                            "', thread declares '" + declared.cell + "'"});
    }
  }
  return issues;
}

DistanceBoundResult distance_bounds(const Expansion& levels, const MarkovDiagram& d,
                                    const Thread& a, const Thread& b, int level,
                                    const MetricSchedule& schedule) {
  if (level < 1 || a.cells.size() < static_cast<std::size_t>(level) ||
      b.cells.size() < static_cast<std::size_t>(level)) {
    throw std::out_of_range("both threads must reach the requested level");
  }
  DistanceBoundResult result;
  const auto tail = mesh_tail(d, schedule, level);
  if (!tail) {
    result.divergent_tail = true;
    return result;
  }

  auto cell_vertices = [&](const ThreadEntry& entry, const ColoredGraph& g) {
    std::vector<std::string> out;
    if (entry.is_edge) {
      const Edge* e = g.find_edge(entry.cell);
      out = {e->ends[0], e->ends[1]};
    } else {
      out = {entry.cell};
    }
    return out;
  };
  auto cell_distance = [&](int at_level) -> std::optional<Rational> {
    const ColoredGraph& g = levels[at_level - 1].graph;
    std::optional<Rational> best;
    for (const auto& u : cell_vertices(a.cells[at_level - 1], g)) {
      for (const auto& v : cell_vertices(b.cells[at_level - 1], g)) {
        auto dist = geodesic_distance(g, schedule.kappa_at(at_level), u, v);
        if (dist && (!best || *dist < *best)) best = dist;
      }
    }
    return best;
  };

  DistanceBound bound;
  bound.level = level;
  bound.tail = *tail;
  const auto d_level = cell_distance(level);
  if (!d_level) {
    // Different components. The separation must persist at every deeper
    // level both threads reach; then the floor kappa_level stands in for a
    // distance no finite level can measure.
    bound.separated = true;
    bool persists = true;
    const int deepest = static_cast<int>(std::min(a.cells.size(), b.cells.size()));
    for (int j = level + 1; j <= deepest; ++j) {
      if (cell_distance(j).has_value()) persists = false;
    }
    bound.lower = persists ? schedule.kappa_at(level) : Rational(0);
    result.bound = bound;
    return result;
  }
  const Rational two_tails = *tail * 2;
  bound.lower = *d_level > two_tails ? *d_level - two_tails : Rational(0);
  bound.upper = *d_level + two_tails;
  result.bound = bound;
  return result;
}

}  // namespace markov
