#include "markov/certificate.hpp"

#include <ctime>

#include "markov/subdivision.hpp"

namespace markov {

namespace {

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

std::string flag(bool b) { return b ? "1" : "0"; }

void write_issues(std::string& out, const std::vector<Issue>& issues, const std::string& indent) {
  if (issues.empty()) {
    out += "[]";
    return;
  }
  out += "[\n";
  for (std::size_t i = 0; i < issues.size(); ++i) {
    out += indent + "  { code: " + quote(issues[i].code) + ", subject: " + quote(issues[i].subject) +
           ", detail: " + quote(issues[i].detail) + " }";
    out += i + 1 < issues.size() ? ",\n" : "\n";
  }
  out += indent + "]";
}

void write_string_map(std::string& out, const std::map<std::string, std::string>& map,
                      const std::string& indent) {
  if (map.empty()) {
    out += "{}";
    return;
  }
  out += "{\n";
  std::size_t i = 0;
  for (const auto& [key, value] : map) {
    out += indent + "  " + quote(key) + ": " + quote(value);
    out += ++i < map.size() ? ",\n" : "\n";
  }
  out += indent + "}";
}

void write_path_map(std::string& out, const std::map<std::string, std::vector<std::string>>& map,
                    const std::string& indent) {
  if (map.empty()) {
    out += "{}";
    return;
  }
  out += "{\n";
  std::size_t i = 0;
  for (const auto& [key, path] : map) {
    out += indent + "  " + quote(key) + ": [";
    for (std::size_t j = 0; j < path.size(); ++j) {
      if (j != 0) out += ", ";
      out += quote(path[j]);
    }
    out += "]";
    out += ++i < map.size() ? ",\n" : "\n";
  }
  out += indent + "}";
}

}  // namespace

std::string serialize_certificate(const Certificate& cert, bool stamp) {
  std::string out = "{\n";
  out += "  schema: \"mcert/1\",\n";
  out += "  tool: " + quote(cert.tool_version) + ",\n";
  if (stamp) {
    char buffer[32];
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    out += "  stamped_at: " + quote(buffer) + ",\n";
  }
  out += "  diagram: { name: " + quote(cert.diagram_name) + ", hash: " + quote(cert.diagram_hash) +
         " },\n";
  out += "  depth: " + std::to_string(cert.depth) + ",\n";
  out += "  valid: " + flag(cert.diagram_valid) + ",\n";
  out += "  validation_issues: ";
  write_issues(out, cert.validation_issues, "  ");
  out += ",\n";

  out += "  connectivity: {\n";
  out += "    hypotheses_hold: " + flag(cert.connectivity.hypotheses_hold) + ",\n";
  out += std::string("    conclusion: ") +
         (cert.connectivity.concludes_connected ? "\"connected+locally-connected\"" : "\"none\"") +
         ",\n";
  out += "    failures: ";
  write_issues(out, cert.connectivity.failures, "    ");
  out += "\n  },\n";

  out += "  dap: {\n";
  out += "    elementary: " + flag(cert.dap.elementary) + ",\n";
  out += "    vertex_productions_canonical: " + flag(cert.dap.vertex_productions_canonical) + ",\n";
  out += "    edge_tops_connected: " + flag(cert.dap.edge_tops_connected) + ",\n";
  out += "    edge_tops_biconnected: " + flag(cert.dap.edge_tops_biconnected) + ",\n";
  out += std::string("    conclusion: ") + (cert.dap.concludes_dap ? "\"dap\"" : "\"none\"") + ",\n";
  out += "    failures: ";
  write_issues(out, cert.dap.failures, "    ");
  out += "\n  },\n";

  out += "  facts: { all_levels_finite: " + flag(cert.all_levels_finite) +
         ", at_least_two_points: " + flag(cert.at_least_two_points) + " },\n";
  out += "  expansion_issues: ";
  write_issues(out, cert.expansion_issues, "  ");
  out += ",\n";

  out += "  label: " + quote(certificate_label_name(cert.label)) + ",\n";
  out += "  properties: [";
  for (std::size_t i = 0; i < cert.properties.size(); ++i) {
    if (i != 0) out += ", ";
    out += quote(cert.properties[i]);
  }
  out += "],\n";

  out += "  pairing_table: {";
  if (cert.pairing_table.empty()) {
    out += "},\n";
  } else {
    out += "\n";
    std::size_t i = 0;
    for (const auto& [production, feas] : cert.pairing_table) {
      out += "    " + quote(production) + ": { straight: " + flag(feas.straight) +
             ", crossed: " + flag(feas.crossed) + " }";
      out += ++i < cert.pairing_table.size() ? ",\n" : "\n";
    }
    out += "  },\n";
  }

  out += "  sections: [";
  if (cert.sections.empty()) {
    out += "]\n";
  } else {
    out += "\n";
    for (std::size_t i = 0; i < cert.sections.size(); ++i) {
      const SectionWitness& w = cert.sections[i];
      out += "    {\n";
      out += "      level: " + std::to_string(w.sections.level) + ",\n";
      out += "      verified: " + flag(w.verified) + ",\n";
      out += "      issues: ";
      write_issues(out, w.issues, "      ");
      out += ",\n";
      out += "      f_vertices: ";
      write_string_map(out, w.sections.f_vertex, "      ");
      out += ",\n";
      out += "      g_vertices: ";
      write_string_map(out, w.sections.g_vertex, "      ");
      out += ",\n";
      out += "      f_paths: ";
      write_path_map(out, w.sections.f_path, "      ");
      out += ",\n";
      out += "      g_paths: ";
      write_path_map(out, w.sections.g_path, "      ");
      out += "\n    }";
      out += i + 1 < cert.sections.size() ? ",\n" : "\n";
    }
    out += "  ]\n";
  }
  out += "}\n";
  return out;
}

std::string serialize_bonding(const LevelState& level) {
  std::string out = "{\n";
  out += "  schema: \"bonding/1\",\n";
  out += "  level: " + std::to_string(level.index) + ",\n";
  out += "  vertex_image: ";
  if (!level.step) {
    out += "{}\n";
  } else {
    std::map<std::string, std::string> image;
    for (const auto& [vertex, point] : level.step->bonding) {
      image[vertex] = subdivision_point_to_string(point);
    }
    write_string_map(out, image, "  ");
    out += "\n";
  }
  out += "}\n";
  return out;
}

}  // namespace markov
