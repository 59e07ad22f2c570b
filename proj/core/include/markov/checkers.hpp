#pragma once

#include <map>
#include <string>
#include <vector>

#include "markov/diagram_validate.hpp"
#include "markov/expansion.hpp"
#include "markov/sections.hpp"

namespace markov {

/// Sufficient condition for a connected and locally connected limit (the
/// k = 0 instance; tops are graphs, so higher k is out of scope): every
/// production quasi-simplicial, every production top connected, start
/// connected.
struct ConnectivityVerdict {
  bool hypotheses_hold = false;
  bool concludes_connected = false;  // connected + locally connected
  std::vector<Issue> failures;  // NotQuasiSimplicial / DisconnectedTop / DisconnectedStart
};

ConnectivityVerdict check_connectedness(const MarkovDiagram& d, const DiagramReport& report);

/// Sufficient condition for the disjoint arcs property: elementary diagram,
/// every vertex production a single edge over a vertex, every edge
/// production top connected and biconnected.
struct DapVerdict {
  bool elementary = false;
  bool vertex_productions_canonical = false;
  bool edge_tops_connected = false;
  bool edge_tops_biconnected = false;
  bool concludes_dap = false;
  std::vector<Issue> failures;
};

DapVerdict check_dap(const MarkovDiagram& d, const DiagramReport& report);

enum class CertificateLabel { MengerCurve, PropertiesList, Inconclusive };
const char* certificate_label_name(CertificateLabel label);

struct SectionWitness {
  SectionPair sections;
  bool verified = false;
  std::vector<Issue> issues;
};

/// Machine-checkable verdict for one diagram. The Menger-curve label needs
/// every box ticked: finite levels, at least two points, the connectivity
/// conclusion and the disjoint-arcs conclusion (the classical
/// characterization of the Menger curve, consumed as a label).
struct Certificate {
  std::string diagram_name;
  std::string diagram_hash;
  std::string tool_version;
  int depth = 0;

  bool diagram_valid = false;
  std::vector<Issue> validation_issues;

  ConnectivityVerdict connectivity;
  DapVerdict dap;

  bool all_levels_finite = false;
  bool at_least_two_points = false;  // witnessed by some expanded level
  std::vector<Issue> expansion_issues;

  CertificateLabel label = CertificateLabel::Inconclusive;
  std::vector<std::string> properties;  // certified property names

  std::map<std::string, PairingFeasibility> pairing_table;
  std::vector<SectionWitness> sections;  // levels 1..depth-1 when DAP concluded
};

Certificate certify(const MarkovDiagram& d, int depth);

}  // namespace markov
