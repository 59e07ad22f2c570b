#include "markov/graph_algorithms.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace markov {

namespace {

std::map<std::string, std::vector<std::string>> adjacency(const ColoredGraph& g) {
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& v : g.vertices()) adj[v.id];
  for (const auto& e : g.edges()) {
    adj[e.ends[0]].push_back(e.ends[1]);
    adj[e.ends[1]].push_back(e.ends[0]);
  }
  for (auto& [_, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

}  // namespace

std::vector<std::vector<std::string>> connected_components(const ColoredGraph& g) {
  auto adj = adjacency(g);
  std::set<std::string> todo;
  for (const auto& v : g.vertices()) todo.insert(v.id);

  std::vector<std::vector<std::string>> components;
  while (!todo.empty()) {
    std::vector<std::string> comp;
    std::deque<std::string> queue{*todo.begin()};
    todo.erase(todo.begin());
    while (!queue.empty()) {
      std::string cur = queue.front();
      queue.pop_front();
      comp.push_back(cur);
      for (const auto& n : adj[cur]) {
        if (todo.erase(n) != 0) queue.push_back(n);
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

BiconnectivityReport is_biconnected(const ColoredGraph& g) {
  BiconnectivityReport out;
  out.connected = is_connected(g) && g.vertex_count() > 0;
  if (!out.connected) return out;

  auto adj = adjacency(g);
  std::map<std::string, int> disc, low;
  std::set<std::string> articulation;
  int timer = 0;

  std::function<void(const std::string&, const std::string&)> dfs =
      [&](const std::string& u, const std::string& parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (const auto& w : adj[u]) {
          if (disc.count(w) == 0) {
            ++children;
            dfs(w, u);
            low[u] = std::min(low[u], low[w]);
            if (!parent.empty() && low[w] >= disc[u]) articulation.insert(u);
          } else if (w != parent) {
            low[u] = std::min(low[u], disc[w]);
          }
        }
        if (parent.empty() && children > 1) articulation.insert(u);
      };

  dfs(g.vertices().front().id, "");
  out.articulation_vertices.assign(articulation.begin(), articulation.end());

  const bool single_edge = g.vertex_count() == 2 && g.edge_count() == 1;
  out.biconnected =
      (g.vertex_count() >= 3 || single_edge) && out.articulation_vertices.empty();
  return out;
}

std::map<std::string, int> bfs_distances(const ColoredGraph& g, const std::string& source) {
  if (!g.has_vertex(source)) throw std::out_of_range("unknown vertex '" + source + "'");
  auto adj = adjacency(g);
  std::map<std::string, int> dist;
  for (const auto& v : g.vertices()) dist[v.id] = -1;
  dist[source] = 0;
  std::deque<std::string> queue{source};
  while (!queue.empty()) {
    std::string cur = queue.front();
    queue.pop_front();
    for (const auto& n : adj[cur]) {
      if (dist[n] < 0) {
        dist[n] = dist[cur] + 1;
        queue.push_back(n);
      }
    }
  }
  return dist;
}

int graph_diameter(const ColoredGraph& g) {
  int best = 0;
  for (const auto& v : g.vertices()) {
    for (const auto& [_, d] : bfs_distances(g, v.id)) best = std::max(best, d);
  }
  return best;
}

std::optional<Rational> geodesic_distance(const ColoredGraph& g, const Rational& kappa,
                                          const std::string& u, const std::string& v) {
  if (!g.has_vertex(u)) throw std::out_of_range("unknown vertex '" + u + "'");
  if (!g.has_vertex(v)) throw std::out_of_range("unknown vertex '" + v + "'");
  auto dist = bfs_distances(g, u);
  int d = dist.at(v);
  if (d < 0) return std::nullopt;
  return kappa * d;
}

namespace {

// Enumerates simple s->t paths in (length, lexicographic) order and yields
// them to `sink` until it returns true. `blocked` vertices may not be used.
bool enumerate_paths(const std::map<std::string, std::vector<std::string>>& adj,
                     const std::string& s, const std::string& t,
                     const std::set<std::string>& blocked,
                     const std::function<bool(const std::vector<std::string>&)>& sink) {
  if (blocked.count(s) != 0 || blocked.count(t) != 0) return false;
  const std::size_t n = adj.size();
  for (std::size_t target_len = s == t ? 0 : 1; target_len < n; ++target_len) {
    std::vector<std::string> path{s};
    std::set<std::string> used{s};
    bool done = false;

    std::function<bool(void)> extend = [&]() -> bool {
      if (path.back() == t) {
        if (path.size() - 1 == target_len) return sink(path);
        return false;  // shorter arrivals were handled in earlier rounds
      }
      if (path.size() - 1 >= target_len) return false;
      auto it = adj.find(path.back());
      if (it == adj.end()) return false;
      for (const auto& next : it->second) {
        if (used.count(next) != 0 || blocked.count(next) != 0) continue;
        path.push_back(next);
        used.insert(next);
        if (extend()) return true;
        used.erase(next);
        path.pop_back();
      }
      return false;
    };

    done = extend();
    if (done) return true;
  }
  return false;
}

}  // namespace

int disjoint_path_bound(const ColoredGraph& g, const std::string& s1, const std::string& s2,
                        const std::string& t1, const std::string& t2) {
  // Vertex-split unit-capacity flow; max flow is at most 2.
  std::map<std::string, int> index;
  for (const auto& v : g.vertices()) {
    int i = static_cast<int>(index.size());
    index[v.id] = i;
  }
  const int n = static_cast<int>(index.size());
  const int source = 2 * n, sink = 2 * n + 1;
  // arcs as adjacency of (to, capacity, reverse-index)
  struct Arc {
    int to, cap, rev;
  };
  std::vector<std::vector<Arc>> arcs(2 * n + 2);
  auto add_arc = [&](int a, int b, int cap) {
    arcs[a].push_back({b, cap, static_cast<int>(arcs[b].size())});
    arcs[b].push_back({a, 0, static_cast<int>(arcs[a].size()) - 1});
  };
  auto vin = [&](const std::string& v) { return 2 * index.at(v); };
  auto vout = [&](const std::string& v) { return 2 * index.at(v) + 1; };

  for (const auto& v : g.vertices()) add_arc(vin(v.id), vout(v.id), 1);
  for (const auto& e : g.edges()) {
    add_arc(vout(e.ends[0]), vin(e.ends[1]), 1);
    add_arc(vout(e.ends[1]), vin(e.ends[0]), 1);
  }
  add_arc(source, vin(s1), 1);
  add_arc(source, vin(s2), 1);
  add_arc(vout(t1), sink, 1);
  add_arc(vout(t2), sink, 1);

  int flow = 0;
  while (flow < 2) {
    std::vector<std::pair<int, int>> parent(2 * n + 2, {-1, -1});
    std::deque<int> queue{source};
    parent[source] = {source, -1};
    while (!queue.empty() && parent[sink].first < 0) {
      int cur = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < arcs[cur].size(); ++i) {
        const Arc& a = arcs[cur][i];
        if (a.cap > 0 && parent[a.to].first < 0) {
          parent[a.to] = {cur, static_cast<int>(i)};
          queue.push_back(a.to);
        }
      }
    }
    if (parent[sink].first < 0) break;
    for (int v = sink; v != source;) {
      auto [p, i] = parent[v];
      arcs[p][i].cap -= 1;
      arcs[arcs[p][i].to][arcs[p][i].rev].cap += 1;
      v = p;
    }
    ++flow;
  }
  return flow;
}

std::optional<PathPair> two_disjoint_paths(
    const ColoredGraph& g, const std::string& s1, const std::string& t1, const std::string& s2,
    const std::string& t2,
    const std::function<bool(const std::vector<std::string>&)>& admissible) {
  for (const auto* v : {&s1, &t1, &s2, &t2}) {
    if (!g.has_vertex(*v)) throw std::out_of_range("unknown vertex '" + *v + "'");
  }
  std::set<std::string> four{s1, t1, s2, t2};
  if (four.size() != 4) throw std::invalid_argument("endpoints must be four distinct vertices");

  // Quick necessary bound before enumerating on larger graphs.
  if (g.vertex_count() > 20 && disjoint_path_bound(g, s1, s2, t1, t2) < 2) return std::nullopt;

  auto adj = adjacency(g);
  std::optional<PathPair> result;

  enumerate_paths(adj, s1, t1, {}, [&](const std::vector<std::string>& p1) {
    if (admissible && !admissible(p1)) return false;
    std::set<std::string> blocked(p1.begin(), p1.end());
    return enumerate_paths(adj, s2, t2, blocked, [&](const std::vector<std::string>& p2) {
      if (admissible && !admissible(p2)) return false;
      result = PathPair{p1, p2};
      return true;
    });
  });
  return result;
}

std::optional<std::map<std::string, int>> bipartition(const ColoredGraph& g) {
  auto adj = adjacency(g);
  std::map<std::string, int> side;
  for (const auto& v : g.vertices()) {
    if (side.count(v.id) != 0) continue;
    side[v.id] = 0;
    std::deque<std::string> queue{v.id};
    while (!queue.empty()) {
      std::string cur = queue.front();
      queue.pop_front();
      for (const auto& n : adj[cur]) {
        auto it = side.find(n);
        if (it == side.end()) {
          side[n] = 1 - side[cur];
          queue.push_back(n);
        } else if (it->second == side[cur]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

}  // namespace markov
