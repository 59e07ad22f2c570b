#pragma once

#include <map>
#include <string>

#include "markov/expansion.hpp"
#include "markov/subdivision.hpp"

namespace markov {

/// Composite of bonding maps pi : K_from -> beta^(from-to)(K_to), realized as
/// a vertex map into an explicitly built iterated subdivision.
struct LevelProjection {
  int from_level = 1;
  int to_level = 1;
  ColoredGraph target;                             // beta^(from-to) of K_to
  std::map<std::string, std::string> vertex_image;  // V(K_from) -> V(target)
};

/// Throws std::out_of_range unless 1 <= to <= from <= depth of the expansion.
LevelProjection project(const Expansion& levels, int from, int to);

}  // namespace markov
