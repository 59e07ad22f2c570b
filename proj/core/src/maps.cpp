#include "markov/maps.hpp"

#include <algorithm>
#include <set>

namespace markov {

namespace {

bool is_end_of(const ColoredGraph& g, const std::string& vertex, const std::string& edge_id) {
  const Edge* e = g.find_edge(edge_id);
  return e != nullptr && (e->ends[0] == vertex || e->ends[1] == vertex);
}

}  // namespace

MapClassification classify_map(const ColoredGraph& domain, const ColoredGraph& codomain,
                               const std::map<std::string, SubdivisionPoint>& vertex_image) {
  MapClassification out;
  bool total = true;
  bool targets_ok = true;

  for (const auto& v : domain.vertices()) {
    auto it = vertex_image.find(v.id);
    if (it == vertex_image.end()) {
      out.issues.push_back({"MissingImage", v.id, "vertex has no image"});
      total = false;
      continue;
    }
    const SubdivisionPoint& p = it->second;
    const bool exists = p.kind == SubdivisionPoint::Kind::Vertex ? codomain.has_vertex(p.id)
                                                                 : codomain.has_edge(p.id);
    if (!exists) {
      out.issues.push_back(
          {"UnknownTarget", v.id, "image " + subdivision_point_to_string(p) + " not in codomain"});
      targets_ok = false;
    }
  }
  for (const auto& [key, _] : vertex_image) {
    if (!domain.has_vertex(key)) {
      out.issues.push_back({"UnknownSource", key, "map key is not a domain vertex"});
      targets_ok = false;
    }
  }
  if (!total || !targets_ok) return out;

  bool any_barycenter = false;
  bool any_full_edge = false;
  bool edges_ok = true;

  for (const auto& v : domain.vertices()) {
    if (vertex_image.at(v.id).kind == SubdivisionPoint::Kind::Barycenter) any_barycenter = true;
  }

  for (const auto& e : domain.edges()) {
    const SubdivisionPoint& a = vertex_image.at(e.ends[0]);
    const SubdivisionPoint& b = vertex_image.at(e.ends[1]);
    EdgeImageShape shape = EdgeImageShape::Invalid;

    if (a == b) {
      shape = EdgeImageShape::Degenerate;
    } else if (a.kind == SubdivisionPoint::Kind::Vertex &&
               b.kind == SubdivisionPoint::Kind::Vertex) {
      if (codomain.find_edge_between(a.id, b.id) != nullptr) shape = EdgeImageShape::FullEdge;
    } else if (a.kind != b.kind) {
      const std::string& vtx = a.kind == SubdivisionPoint::Kind::Vertex ? a.id : b.id;
      const std::string& bary = a.kind == SubdivisionPoint::Kind::Barycenter ? a.id : b.id;
      if (is_end_of(codomain, vtx, bary)) shape = EdgeImageShape::HalfEdge;
    }
    // two distinct barycenters: Invalid

    out.edge_shapes[e.id] = shape;
    if (shape == EdgeImageShape::Invalid) {
      out.issues.push_back({"InvalidEdgeImage", e.id,
                            subdivision_point_to_string(a) + " -- " + subdivision_point_to_string(b)});
      edges_ok = false;
    }
    if (shape == EdgeImageShape::FullEdge) any_full_edge = true;
  }

  out.valid = edges_ok;
  out.simplicial = out.valid && !any_barycenter;
  out.quasi_simplicial = out.valid && !any_full_edge;
  return out;
}

EmbeddingCheck check_colored_embedding(const ColoredGraph& domain, const ColoredGraph& codomain,
                                       const std::map<std::string, std::string>& vertex_map) {
  EmbeddingCheck out;

  bool resolvable = true;
  for (const auto& v : domain.vertices()) {
    auto it = vertex_map.find(v.id);
    if (it == vertex_map.end()) {
      out.issues.push_back({"MissingImage", v.id, "vertex has no image"});
      resolvable = false;
      continue;
    }
    const Vertex* target = codomain.find_vertex(it->second);
    if (target == nullptr) {
      out.issues.push_back({"UnknownTarget", v.id, "image '" + it->second + "' not in codomain"});
      resolvable = false;
      continue;
    }
    if (target->color != v.color) {
      out.issues.push_back({"ColorMismatch", v.id,
                            "vertex color " + std::to_string(v.color) + " maps onto color " +
                                std::to_string(target->color)});
    }
  }
  if (!resolvable) return out;

  std::map<std::string, std::string> inverse;
  for (const auto& v : domain.vertices()) {
    const std::string& img = vertex_map.at(v.id);
    auto [it, inserted] = inverse.emplace(img, v.id);
    if (!inserted) {
      out.issues.push_back({"NotInjective", v.id, "shares image '" + img + "' with '" + it->second + "'"});
    }
  }

  for (const auto& e : domain.edges()) {
    const Edge* img = codomain.find_edge_between(vertex_map.at(e.ends[0]), vertex_map.at(e.ends[1]));
    if (img == nullptr) {
      out.issues.push_back({"EdgeNotPreserved", e.id, "image endpoints span no codomain edge"});
      continue;
    }
    out.edge_image[e.id] = img->id;
    if (img->color != e.color) {
      out.issues.push_back({"ColorMismatch", e.id,
                            "edge color " + std::to_string(e.color) + " maps onto color " +
                                std::to_string(img->color)});
    }
  }

  out.ok = out.issues.empty();
  if (!out.ok) out.edge_image.clear();
  return out;
}

namespace {

bool extend_isomorphism(const ColoredGraph& a, const ColoredGraph& b, std::size_t next,
                        std::map<std::string, std::string>& fwd, std::set<std::string>& used) {
  if (next == a.vertices().size()) {
    // Vertex bijection fixed; require edges to match both ways with colors.
    for (const auto& e : a.edges()) {
      const Edge* img = b.find_edge_between(fwd.at(e.ends[0]), fwd.at(e.ends[1]));
      if (img == nullptr || img->color != e.color) return false;
    }
    for (const auto& e : b.edges()) {
      // Surjectivity on edges: every b-edge must be hit.
      std::string pre0, pre1;
      for (const auto& [k, v] : fwd) {
        if (v == e.ends[0]) pre0 = k;
        if (v == e.ends[1]) pre1 = k;
      }
      if (pre0.empty() || pre1.empty()) return false;
      const Edge* src = a.find_edge_between(pre0, pre1);
      if (src == nullptr || src->color != e.color) return false;
    }
    return true;
  }

  const Vertex& v = a.vertices()[next];
  for (const auto& w : b.vertices()) {
    if (used.count(w.id) != 0 || w.color != v.color) continue;
    // Prune: already-mapped neighbors must stay neighbors with edge colors intact.
    bool consistent = true;
    for (const auto& e : a.incident_edges(v.id)) {
      const std::string& other = e->ends[0] == v.id ? e->ends[1] : e->ends[0];
      auto it = fwd.find(other);
      if (it == fwd.end()) continue;
      const Edge* img = b.find_edge_between(w.id, it->second);
      if (img == nullptr || img->color != e->color) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    fwd[v.id] = w.id;
    used.insert(w.id);
    if (extend_isomorphism(a, b, next + 1, fwd, used)) return true;
    fwd.erase(v.id);
    used.erase(w.id);
  }
  return false;
}

}  // namespace

std::optional<std::map<std::string, std::string>> colored_isomorphism(const ColoredGraph& a,
                                                                      const ColoredGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return std::nullopt;
  }
  std::map<std::string, std::string> fwd;
  std::set<std::string> used;
  if (extend_isomorphism(a, b, 0, fwd, used)) return fwd;
  return std::nullopt;
}

}  // namespace markov
