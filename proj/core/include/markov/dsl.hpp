#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "markov/diagram.hpp"

namespace markov {

/// Strict parse of the .mdgm diagram dialect (see docs/format.md). All
/// references are resolved during the parse; unknown fields, duplicate
/// names and malformed identifiers are rejected. Issue codes: SyntaxError
/// (with "line:col" subjects), UnknownField, UnknownReference, DuplicateName.
struct ParseResult {
  std::optional<MarkovDiagram> diagram;
  std::vector<Issue> issues;
  bool ok() const { return diagram.has_value(); }
};

ParseResult parse_diagram(std::string_view text);

/// Canonical form: fixed field order, sorted ids and names, two-space
/// indent. Byte-stable across runs and a fixpoint of parse . serialize.
std::string serialize_diagram(const MarkovDiagram& d);

/// FNV-1a 64 over the canonical serialization, as 16 hex digits. Identifies
/// diagram content in certificates.
std::string content_hash(const MarkovDiagram& d);
std::string fnv1a64_hex(std::string_view bytes);

/// Identifier shape shared by every id and name in the dialect. Keeping '~'
/// and '|' out of source ids is what makes subdivision names and expansion
/// addresses collision-free.
bool valid_identifier(std::string_view id);

bool diagrams_equal(const MarkovDiagram& a, const MarkovDiagram& b);

}  // namespace markov
