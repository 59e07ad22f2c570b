#pragma once

#include <map>
#include <optional>
#include <string>

#include "markov/colored_graph.hpp"

namespace markov {

enum class ExportFormat { Dot, Json };

/// "dot" or "json"; anything else is an unsupported format.
std::optional<ExportFormat> parse_export_format(const std::string& text);

/// Node/edge listing with colors rendered as styles. Palette names that are
/// dot line styles (solid, dotted, dashed, bold) become style attributes,
/// anything else a color attribute. Node names are the canonical addresses.
std::string export_graph(const ColoredGraph& g, const std::map<Color, std::string>& palette,
                         ExportFormat format, const std::string& name);

}  // namespace markov
