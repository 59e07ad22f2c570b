#include <algorithm>
#include <cstdint>

#include "markov/dsl.hpp"

namespace markov {

namespace {

// Canonical form is sorted by name whatever the declaration order was.
template <typename T>
std::vector<const T*> sorted_by_name(const std::vector<T>& items) {
  std::vector<const T*> out;
  for (const auto& item : items) out.push_back(&item);
  std::stable_sort(out.begin(), out.end(),
                   [](const T* a, const T* b) { return a->name < b->name; });
  return out;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

void write_graph(std::string& out, const ColoredGraph& g, const std::string& indent) {
  out += "{\n";
  const std::string in1 = indent + "  ";
  const std::string in2 = in1 + "  ";
  out += in1 + "vertices: [";
  if (g.vertices().empty()) {
    out += "],\n";
  } else {
    out += "\n";
    for (std::size_t i = 0; i < g.vertices().size(); ++i) {
      const Vertex& v = g.vertices()[i];
      out += in2 + "{ id: " + quote(v.id) + ", color: " + std::to_string(v.color) + " }";
      out += i + 1 < g.vertices().size() ? ",\n" : "\n";
    }
    out += in1 + "],\n";
  }
  out += in1 + "edges: [";
  if (g.edges().empty()) {
    out += "]\n";
  } else {
    out += "\n";
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      const Edge& e = g.edges()[i];
      out += in2 + "{ id: " + quote(e.id) + ", ends: [" + quote(e.ends[0]) + ", " +
             quote(e.ends[1]) + "], color: " + std::to_string(e.color) + " }";
      out += i + 1 < g.edges().size() ? ",\n" : "\n";
    }
    out += in1 + "]\n";
  }
  out += indent + "}";
}

template <typename Map, typename Format>
void write_map(std::string& out, const Map& map, const std::string& indent, Format format) {
  if (map.empty()) {
    out += "{}";
    return;
  }
  out += "{\n";
  const std::string in1 = indent + "  ";
  std::size_t i = 0;
  for (const auto& [key, value] : map) {
    out += in1 + key + ": " + format(value);
    out += ++i < map.size() ? ",\n" : "\n";
  }
  out += indent + "}";
}

}  // namespace

std::string serialize_diagram(const MarkovDiagram& d) {
  std::string out = "{\n";
  out += "  name: " + quote(d.name) + ",\n";

  out += "  palette: {";
  if (d.palette.empty()) {
    out += "},\n";
  } else {
    out += "\n";
    std::size_t i = 0;
    for (const auto& [color, name] : d.palette) {
      out += "    " + std::to_string(color) + ": " + quote(name);
      out += ++i < d.palette.size() ? ",\n" : "\n";
    }
    out += "  },\n";
  }

  out += "  start: ";
  write_graph(out, d.start, "  ");
  out += ",\n";

  const auto productions = sorted_by_name(d.productions);
  out += "  productions: [";
  if (productions.empty()) {
    out += "],\n";
  } else {
    out += "\n";
    for (std::size_t i = 0; i < productions.size(); ++i) {
      const Production& p = *productions[i];
      out += "    {\n";
      out += "      name: " + quote(p.name) + ",\n";
      out += "      top: ";
      write_graph(out, p.top, "      ");
      out += ",\n";
      out += "      bottom: ";
      write_graph(out, p.bottom, "      ");
      out += ",\n";
      out += "      map: ";
      write_map(out, p.map, "      ", [](const SubdivisionPoint& target) {
        return quote(subdivision_point_to_string(target));
      });
      out += "\n    }";
      out += i + 1 < productions.size() ? ",\n" : "\n";
    }
    out += "  ],\n";
  }

  const auto gluings = sorted_by_name(d.gluings);
  out += "  gluings: [";
  if (gluings.empty()) {
    out += "]";
  } else {
    out += "\n";
    for (std::size_t i = 0; i < gluings.size(); ++i) {
      const Gluing& g = *gluings[i];
      out += "    {\n";
      out += "      name: " + quote(g.name) + ",\n";
      out += "      src: " + quote(g.src) + ",\n";
      out += "      dst: " + quote(g.dst) + ",\n";
      out += "      top_map: ";
      write_map(out, g.top_map, "      ", [](const std::string& v) { return quote(v); });
      out += ",\n";
      out += "      bottom_map: ";
      write_map(out, g.bottom_map, "      ", [](const std::string& v) { return quote(v); });
      out += "\n    }";
      out += i + 1 < gluings.size() ? ",\n" : "\n";
    }
    out += "  ]";
  }

  if (!d.notes.empty()) {
    out += ",\n  notes: " + quote(d.notes) + "\n";
  } else {
    out += "\n";
  }
  out += "}\n";
  return out;
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

std::string content_hash(const MarkovDiagram& d) { return fnv1a64_hex(serialize_diagram(d)); }

bool diagrams_equal(const MarkovDiagram& a, const MarkovDiagram& b) {
  return serialize_diagram(a) == serialize_diagram(b);
}

}  // namespace markov
