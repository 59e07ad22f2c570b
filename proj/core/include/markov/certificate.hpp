#pragma once

#include <string>

#include "markov/checkers.hpp"
#include "markov/expansion.hpp"

namespace markov {

/// Canonical .mcert text. Byte-stable: identical certificates serialize to
/// identical bytes. `stamp` adds a wall-clock field and is off by default so
/// that repeated runs stay byte-identical.
std::string serialize_certificate(const Certificate& cert, bool stamp = false);

/// Serialized bonding map of one expansion step (vertex -> "v:.."/"bary:..").
std::string serialize_bonding(const LevelState& level);

}  // namespace markov
