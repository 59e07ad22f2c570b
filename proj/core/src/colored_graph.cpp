#include "markov/colored_graph.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace markov {

std::string format_issue(const Issue& issue) {
  std::string out = issue.code;
  if (!issue.subject.empty()) out += "(" + issue.subject + ")";
  if (!issue.detail.empty()) out += ": " + issue.detail;
  return out;
}

ColoredGraph::ColoredGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    vertex_index_.emplace(vertices_[i].id, i);
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    edge_index_.emplace(edges_[i].id, i);
  }
}

bool ColoredGraph::has_vertex(const std::string& id) const {
  return vertex_index_.count(id) != 0;
}

bool ColoredGraph::has_edge(const std::string& id) const {
  return edge_index_.count(id) != 0;
}

const Vertex* ColoredGraph::find_vertex(const std::string& id) const {
  auto it = vertex_index_.find(id);
  return it == vertex_index_.end() ? nullptr : &vertices_[it->second];
}

const Edge* ColoredGraph::find_edge(const std::string& id) const {
  auto it = edge_index_.find(id);
  return it == edge_index_.end() ? nullptr : &edges_[it->second];
}

const Edge* ColoredGraph::find_edge_between(const std::string& a,
                                            const std::string& b) const {
  for (const auto& e : edges_) {
    if ((e.ends[0] == a && e.ends[1] == b) || (e.ends[0] == b && e.ends[1] == a)) {
      return &e;
    }
  }
  return nullptr;
}

std::vector<std::string> ColoredGraph::neighbors(const std::string& vertex) const {
  std::set<std::string> out;
  for (const auto& e : edges_) {
    if (e.ends[0] == vertex) out.insert(e.ends[1]);
    if (e.ends[1] == vertex) out.insert(e.ends[0]);
  }
  return {out.begin(), out.end()};
}

std::vector<const Edge*> ColoredGraph::incident_edges(const std::string& vertex) const {
  std::vector<const Edge*> out;
  for (const auto& e : edges_) {
    if (e.ends[0] == vertex || e.ends[1] == vertex) out.push_back(&e);
  }
  return out;
}

std::vector<Issue> validate_graph(const ColoredGraph& g) {
  std::vector<Issue> issues;

  std::set<std::string> seen;
  for (const auto& v : g.vertices()) {
    if (!seen.insert(v.id).second) {
      issues.push_back({"DuplicateId", v.id, "duplicate vertex id"});
    }
  }
  std::set<std::string> seen_edges;
  for (const auto& e : g.edges()) {
    if (!seen_edges.insert(e.id).second) {
      issues.push_back({"DuplicateId", e.id, "duplicate edge id"});
    }
    if (seen.count(e.id) != 0) {
      issues.push_back({"DuplicateId", e.id, "edge id collides with a vertex id"});
    }
  }

  // Endpoint pairs treated unordered for the multi-edge check.
  std::set<std::pair<std::string, std::string>> endpoint_pairs;
  for (const auto& e : g.edges()) {
    bool dangling = false;
    for (const auto& end : e.ends) {
      if (!g.has_vertex(end)) {
        issues.push_back({"DanglingEndpoint", e.id, "endpoint '" + end + "' is not a vertex"});
        dangling = true;
      }
    }
    if (e.ends[0] == e.ends[1]) {
      issues.push_back({"SelfLoop", e.id, "endpoints coincide"});
      continue;
    }
    if (dangling) continue;
    auto key = std::minmax(e.ends[0], e.ends[1]);
    if (!endpoint_pairs.insert(key).second) {
      issues.push_back({"DuplicateEdge", e.id,
                        "second edge between '" + key.first + "' and '" + key.second + "'"});
    }
  }
  return issues;
}

}  // namespace markov
