#include "markov/projection.hpp"

#include <stdexcept>

namespace markov {

LevelProjection project(const Expansion& levels, int from, int to) {
  if (to < 1 || from < to || static_cast<std::size_t>(from) > levels.size()) {
    throw std::out_of_range("projection levels out of range");
  }

  LevelProjection out;
  out.from_level = from;
  out.to_level = to;
  out.target = levels[to - 1].graph;
  for (const auto& v : out.target.vertices()) out.vertex_image[v.id] = v.id;

  // Walk j = to .. from-1, composing the bonding map of level j+1 with the
  // already-built projection of level j, one extra subdivision per step.
  for (int j = to; j < from; ++j) {
    const ColoredGraph& level_j = levels[j - 1].graph;
    const Subdivision finer = barycentric_subdivide(out.target);
    std::map<std::string, std::string> next_image;

    for (const auto& v : levels[j].graph.vertices()) {
      const SubdivisionPoint& p = levels[j].step->bonding.at(v.id);
      if (p.kind == SubdivisionPoint::Kind::Vertex) {
        // Vertices of the target persist under subdivision with the same id.
        next_image[v.id] = out.vertex_image.at(p.id);
        continue;
      }
      const Edge* e = level_j.find_edge(p.id);
      const std::string a = out.vertex_image.at(e->ends[0]);
      const std::string b = out.vertex_image.at(e->ends[1]);
      if (a == b) {
        next_image[v.id] = a;  // the edge collapsed at this resolution
        continue;
      }
      const Edge* image_edge = out.target.find_edge_between(a, b);
      if (image_edge == nullptr) {
        throw std::logic_error("projection of edge '" + e->id + "' is not a simplex");
      }
      next_image[v.id] = finer.barycenter_id(image_edge->id);
    }

    out.target = finer.graph;
    out.vertex_image = std::move(next_image);
  }
  return out;
}

}  // namespace markov
