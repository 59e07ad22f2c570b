#include "markov/graph_export.hpp"

#include <set>

namespace markov {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string style_attr(Color color, const std::map<Color, std::string>& palette) {
  static const std::set<std::string> line_styles = {"solid", "dotted", "dashed", "bold"};
  auto it = palette.find(color);
  const std::string name = it == palette.end() ? "c" + std::to_string(color) : it->second;
  if (line_styles.count(name) != 0) return "style=" + name;
  return "color=\"" + escape(name) + "\"";
}

std::string to_dot(const ColoredGraph& g, const std::map<Color, std::string>& palette,
                   const std::string& name) {
  std::string out = "graph \"" + escape(name) + "\" {\n";
  for (const auto& v : g.vertices()) {
    out += "  \"" + escape(v.id) + "\" [" + style_attr(v.color, palette) + "];\n";
  }
  for (const auto& e : g.edges()) {
    out += "  \"" + escape(e.ends[0]) + "\" -- \"" + escape(e.ends[1]) + "\" [" +
           style_attr(e.color, palette) + "];\n";
  }
  out += "}\n";
  return out;
}

std::string to_json(const ColoredGraph& g, const std::string& name) {
  std::string out = "{\n";
  out += "  \"name\": \"" + escape(name) + "\",\n";
  out += "  \"nodes\": [";
  for (std::size_t i = 0; i < g.vertices().size(); ++i) {
    const Vertex& v = g.vertices()[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    { \"id\": \"" + escape(v.id) + "\", \"color\": " + std::to_string(v.color) + " }";
  }
  out += g.vertices().empty() ? "],\n" : "\n  ],\n";
  out += "  \"edges\": [";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    { \"id\": \"" + escape(e.id) + "\", \"source\": \"" + escape(e.ends[0]) +
           "\", \"target\": \"" + escape(e.ends[1]) + "\", \"color\": " + std::to_string(e.color) +
           " }";
  }
  out += g.edges().empty() ? "]\n" : "\n  ]\n";
  out += "}\n";
  return out;
}

}  // namespace

std::optional<ExportFormat> parse_export_format(const std::string& text) {
  if (text == "dot") return ExportFormat::Dot;
  if (text == "json") return ExportFormat::Json;
  return std::nullopt;
}

std::string export_graph(const ColoredGraph& g, const std::map<Color, std::string>& palette,
                         ExportFormat format, const std::string& name) {
  return format == ExportFormat::Dot ? to_dot(g, palette, name) : to_json(g, name);
}

}  // namespace markov
