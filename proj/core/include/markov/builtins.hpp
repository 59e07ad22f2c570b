#pragma once

#include <optional>
#include <string>
#include <vector>

#include "markov/diagram.hpp"

namespace markov {

/// Names of the bundled diagrams: cantor, suspension, diamond, join,
/// solenoid, one_eight.
std::vector<std::string> builtin_names();

std::optional<MarkovDiagram> builtin_diagram(const std::string& name);

}  // namespace markov
