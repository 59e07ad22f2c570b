#pragma once

#include <vector>

#include "markov/expansion.hpp"

namespace markov {

/// Independent re-verification of one decomposition step: chart maps are
/// colored embeddings, top and bottom images cover their levels and are
/// closed under intersection, the full commuting condition holds along every
/// assembly arc, and the bonding map classifies. Deliberately avoids the
/// engine's address bookkeeping; everything is recomputed from the stored
/// graphs, charts and diagram.
std::vector<Issue> verify_decomposition(const MarkovDiagram& d, const ColoredGraph& base,
                                        const ColoredGraph& next, const DecompositionStep& step);

/// Applies verify_decomposition to every step of an expansion.
std::vector<Issue> verify_expansion(const MarkovDiagram& d, const Expansion& levels);

}  // namespace markov
