#include "markov/checkers.hpp"

#include <algorithm>

#include "markov/dsl.hpp"
#include "markov/graph_algorithms.hpp"
#include "markov/version.hpp"

namespace markov {

ConnectivityVerdict check_connectedness(const MarkovDiagram& d, const DiagramReport& report) {
  ConnectivityVerdict out;
  for (const auto& p : d.productions) {
    const ProductionVerdict* verdict = report.production_verdict(p.name);
    if (verdict == nullptr || !verdict->ok) {
      out.failures.push_back({"InvalidProduction", p.name, "production does not validate"});
      continue;
    }
    if (!verdict->classification.quasi_simplicial) {
      out.failures.push_back({"NotQuasiSimplicial", p.name,
                              "some top edge maps onto a full bottom edge"});
    }
    if (connected_components(p.top).size() != 1) {
      out.failures.push_back({"DisconnectedTop", p.name,
                              std::to_string(connected_components(p.top).size()) + " components"});
    }
  }
  if (connected_components(d.start).size() != 1) {
    out.failures.push_back({"DisconnectedStart", d.name,
                            std::to_string(connected_components(d.start).size()) + " components"});
  }
  out.hypotheses_hold = out.failures.empty();
  out.concludes_connected = out.hypotheses_hold;
  return out;
}

namespace {

bool canonical_vertex_production(const Production& p) {
  // A single edge collapsing onto a single vertex. The map is forced, so the
  // shape of the top decides.
  return production_kind(p) == ProductionKind::Vertex && p.top.vertex_count() == 2 &&
         p.top.edge_count() == 1;
}

}  // namespace

DapVerdict check_dap(const MarkovDiagram& d, const DiagramReport& report) {
  DapVerdict out;
  out.elementary = report.elementary;
  if (!out.elementary) {
    for (const auto& p : d.productions) {
      if (production_kind(p) == ProductionKind::General) {
        out.failures.push_back({"NotElementary", p.name, "bottom is neither a vertex nor an edge"});
      }
    }
  }

  out.vertex_productions_canonical = true;
  out.edge_tops_connected = true;
  out.edge_tops_biconnected = true;
  for (const auto& p : d.productions) {
    const ProductionKind kind = production_kind(p);
    if (kind == ProductionKind::Vertex && !canonical_vertex_production(p)) {
      out.vertex_productions_canonical = false;
      out.failures.push_back({"VertexProductionNotCanonical", p.name,
                              "top is not a single edge over the bottom vertex"});
    }
    if (kind == ProductionKind::Edge) {
      const BiconnectivityReport bic = is_biconnected(p.top);
      if (!bic.connected) {
        out.edge_tops_connected = false;
        out.failures.push_back({"DisconnectedEdgeTop", p.name, ""});
      }
      if (!bic.biconnected) {
        out.edge_tops_biconnected = false;
        std::string detail;
        for (const auto& v : bic.articulation_vertices) {
          detail += (detail.empty() ? "articulation: " : ", ") + v;
        }
        out.failures.push_back({"EdgeTopNotBiconnected", p.name, detail});
      }
    }
  }

  out.concludes_dap = out.elementary && out.vertex_productions_canonical &&
                      out.edge_tops_connected && out.edge_tops_biconnected;
  return out;
}

const char* certificate_label_name(CertificateLabel label) {
  switch (label) {
    case CertificateLabel::MengerCurve:
      return "menger-curve";
    case CertificateLabel::PropertiesList:
      return "properties";
    case CertificateLabel::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Certificate certify(const MarkovDiagram& d, int depth) {
  Certificate cert;
  cert.diagram_name = d.name;
  cert.tool_version = version_string();
  cert.diagram_hash = content_hash(d);
  cert.depth = depth;

  const DiagramReport report = validate_diagram(d);
  cert.diagram_valid = report.valid();
  if (!cert.diagram_valid) {
    cert.validation_issues = report.all_issues();
    return cert;
  }

  cert.connectivity = check_connectedness(d, report);
  cert.dap = check_dap(d, report);

  Expansion levels;
  if (report.expandable()) {
    ExpandResult ex = expand(d, report, depth);
    if (!ex.ok()) {
      cert.expansion_issues = ex.issues;
    }
    levels = std::move(ex.levels);
  } else {
    levels.push_back({1, d.start, std::nullopt});
  }
  cert.all_levels_finite = cert.expansion_issues.empty();
  for (const auto& level : levels) {
    if (level.graph.vertex_count() >= 2) cert.at_least_two_points = true;
  }

  if (cert.dap.vertex_productions_canonical && report.expandable()) {
    cert.pairing_table = pairing_feasibility(d, report);
  }
  if (cert.dap.concludes_dap && cert.expansion_issues.empty()) {
    for (int i = 1; i + 1 <= static_cast<int>(levels.size()); ++i) {
      SectionsResult built = build_sections(d, report, levels, i);
      SectionWitness witness;
      if (built.ok()) {
        witness.sections = std::move(*built.sections);
        witness.issues = verify_sections(levels, witness.sections);
        witness.verified = witness.issues.empty();
      } else {
        witness.sections.level = i;
        witness.issues = std::move(built.issues);
      }
      cert.sections.push_back(std::move(witness));
    }
  }

  const bool menger = cert.connectivity.concludes_connected && cert.dap.concludes_dap &&
                      cert.all_levels_finite && cert.at_least_two_points;
  if (cert.connectivity.concludes_connected) {
    cert.properties.push_back("connected");
    cert.properties.push_back("locally-connected");
  }
  if (cert.dap.concludes_dap) cert.properties.push_back("dap");
  if (menger) {
    cert.properties.push_back("menger-curve");
    cert.label = CertificateLabel::MengerCurve;
  } else if (!cert.properties.empty()) {
    cert.label = CertificateLabel::PropertiesList;
  } else {
    cert.label = CertificateLabel::Inconclusive;
  }
  return cert;
}

}  // namespace markov
