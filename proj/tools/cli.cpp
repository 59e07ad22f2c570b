#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "markov/builtins.hpp"
#include "markov/certificate.hpp"
#include "markov/checkers.hpp"
#include "markov/decomposition_check.hpp"
#include "markov/dsl.hpp"
#include "markov/graph_export.hpp"
#include "markov/limit_metrics.hpp"
#include "markov/version.hpp"

namespace markov::cli {

namespace {

namespace fs = std::filesystem;

struct DiagramSource {
  std::string builtin;
  std::string path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--builtin", builtin, "load one of the bundled diagrams");
    cmd->add_option("path", path, "diagram file (.mdgm)");
  }
};

std::optional<MarkovDiagram> load_diagram(const DiagramSource& source, std::ostream& err) {
  if (!source.builtin.empty() && !source.path.empty()) {
    err << "error: give either --builtin or a path, not both\n";
    return std::nullopt;
  }
  if (!source.builtin.empty()) {
    auto d = builtin_diagram(source.builtin);
    if (!d) {
      err << "error: unknown builtin '" << source.builtin << "'; available:";
      for (const auto& name : builtin_names()) err << " " << name;
      err << "\n";
    }
    return d;
  }
  if (source.path.empty()) {
    err << "error: no diagram given (use --builtin NAME or a path)\n";
    return std::nullopt;
  }
  std::ifstream in(source.path);
  if (!in) {
    err << "error: cannot read '" << source.path << "'\n";
    return std::nullopt;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  ParseResult parsed = parse_diagram(buffer.str());
  if (!parsed.ok()) {
    for (const auto& issue : parsed.issues) {
      err << source.path << ": " << format_issue(issue) << "\n";
    }
    return std::nullopt;
  }
  return parsed.diagram;
}

bool write_file(const fs::path& path, const std::string& content, std::ostream& err) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    err << "error: cannot write '" << path.string() << "'\n";
    return false;
  }
  out << content;
  return true;
}

void print_report(const MarkovDiagram& d, const DiagramReport& report, std::ostream& out) {
  out << "diagram " << d.name << ": " << (report.valid() ? "valid" : "INVALID");
  if (report.valid()) {
    out << (report.elementary ? ", elementary" : ", not elementary");
    if (report.elementary) {
      out << (report.coverage_complete ? ", coverage complete" : ", coverage incomplete");
    }
  }
  out << "\n";
  for (const auto& p : report.productions) {
    out << "  production " << p.name << ": ";
    if (!p.ok) {
      out << "INVALID\n";
      continue;
    }
    switch (p.kind) {
      case ProductionKind::Vertex:
        out << "vertex production";
        break;
      case ProductionKind::Edge:
        out << "edge production";
        break;
      case ProductionKind::General:
        out << "general production";
        break;
    }
    if (p.classification.simplicial && p.classification.quasi_simplicial) {
      out << ", simplicial and quasi-simplicial";
    } else if (p.classification.quasi_simplicial) {
      out << ", quasi-simplicial";
    } else if (p.classification.simplicial) {
      out << ", simplicial";
    }
    out << "\n";
  }
  for (const auto& g : report.gluings) {
    out << "  gluing " << g.name << ": " << (g.ok ? "ok" : "INVALID") << "\n";
  }
  if (report.coverage_complete) {
    for (const auto& rule : report.vertex_rules) {
      out << "  vertex color " << rule.color << " -> " << rule.production << "\n";
    }
    for (const auto& rule : report.edge_rules) {
      out << "  edge color " << rule.edge_color << " ends (" << rule.tail_color << ","
          << rule.head_color << ") -> " << rule.production << " [tail: " << rule.tail_gluing
          << ", head: " << rule.head_gluing << "]\n";
    }
  }
  for (const auto& issue : report.all_issues()) {
    out << "  " << format_issue(issue) << "\n";
  }
}

std::optional<MetricSchedule> parse_schedule(const std::string& text, const Rational& kappa1,
                                             std::ostream& err) {
  if (text == "halving") return MetricSchedule::halving(kappa1);
  if (text == "constant") return MetricSchedule::constant(kappa1);
  if (text.rfind("list:", 0) == 0) {
    std::vector<Rational> values;
    std::string rest = text.substr(5);
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto q = rational_from_string(item);
      if (!q || *q <= 0) {
        err << "error: bad schedule entry '" << item << "'\n";
        return std::nullopt;
      }
      values.push_back(*q);
    }
    if (values.empty()) {
      err << "error: empty schedule list\n";
      return std::nullopt;
    }
    return MetricSchedule::custom_list(values);
  }
  err << "error: unknown schedule '" << text << "' (halving|constant|list:...)\n";
  return std::nullopt;
}

int cmd_validate(const DiagramSource& source, std::ostream& out, std::ostream& err) {
  auto diagram = load_diagram(source, err);
  if (!diagram) return kValidationFailure;
  const DiagramReport report = validate_diagram(*diagram);
  print_report(*diagram, report, out);
  return report.valid() && (!report.elementary || report.coverage_complete) ? kOk
                                                                            : kValidationFailure;
}

int cmd_expand(const DiagramSource& source, int depth, const std::string& out_dir,
               const std::string& format_name, std::ostream& out, std::ostream& err) {
  auto diagram = load_diagram(source, err);
  if (!diagram) return kValidationFailure;
  auto format = parse_export_format(format_name);
  if (!format) {
    err << "error: unsupported format '" << format_name << "' (dot|json)\n";
    return kValidationFailure;
  }

  const DiagramReport report = validate_diagram(*diagram);
  if (!report.expandable()) {
    err << "error: diagram is not expandable\n";
    for (const auto& issue : report.all_issues()) err << "  " << format_issue(issue) << "\n";
    return kValidationFailure;
  }
  ExpandResult expansion = expand(*diagram, report, depth);
  if (!expansion.ok()) {
    for (const auto& issue : expansion.issues) err << format_issue(issue) << "\n";
    return kInternalError;
  }

  fs::create_directories(out_dir);
  const std::string extension = *format == ExportFormat::Dot ? ".dot" : ".json";
  std::string summary;
  for (const auto& level : expansion.levels) {
    const std::string tag = std::to_string(level.index);
    const std::string base = diagram->name + "_level_" + tag;
    if (!write_file(fs::path(out_dir) / (base + extension),
                    export_graph(level.graph, diagram->palette, *format, base), err)) {
      return kValidationFailure;
    }
    if (level.step) {
      if (!write_file(fs::path(out_dir) / (diagram->name + "_bonding_" + tag + ".txt"),
                      serialize_bonding(level), err)) {
        return kValidationFailure;
      }
      auto issues = verify_decomposition(*diagram, expansion.levels[level.index - 2].graph,
                                         level.graph, *level.step);
      summary += "level " + tag + ": " + std::to_string(level.graph.vertex_count()) +
                 " vertices, " + std::to_string(level.graph.edge_count()) + " edges, " +
                 (issues.empty() ? "decomposition verified" : "DECOMPOSITION FAILED") + "\n";
      for (const auto& issue : issues) summary += "  " + format_issue(issue) + "\n";
    } else {
      summary += "level " + tag + ": " + std::to_string(level.graph.vertex_count()) +
                 " vertices, " + std::to_string(level.graph.edge_count()) + " edges\n";
    }
  }
  if (!write_file(fs::path(out_dir) / (diagram->name + "_verification.txt"), summary, err)) {
    return kValidationFailure;
  }
  out << summary;
  out << "wrote " << expansion.levels.size() << " levels to " << out_dir << "\n";
  return kOk;
}

int cmd_check(const DiagramSource& source, int depth, const std::string& out_dir,
              const std::string& schedule_name, const std::string& kappa_text,
              const std::string& require, std::size_t limit, bool stamp, std::ostream& out,
              std::ostream& err) {
  auto diagram = load_diagram(source, err);
  if (!diagram) return kValidationFailure;
  const auto kappa = rational_from_string(kappa_text);
  if (!kappa || *kappa <= 0) {
    err << "error: --kappa must be a positive rational\n";
    return kValidationFailure;
  }
  const auto schedule = parse_schedule(schedule_name, *kappa, err);
  if (!schedule) return kValidationFailure;

  const Certificate cert = certify(*diagram, depth);
  if (!cert.diagram_valid) {
    err << "error: diagram does not validate\n";
    for (const auto& issue : cert.validation_issues) err << "  " << format_issue(issue) << "\n";
    return kValidationFailure;
  }

  out << "diagram " << cert.diagram_name << " (hash " << cert.diagram_hash << ")\n";
  out << "  label: " << certificate_label_name(cert.label) << "\n";
  out << "  connectivity hypotheses: " << (cert.connectivity.hypotheses_hold ? "hold" : "fail")
      << "\n";
  for (const auto& issue : cert.connectivity.failures) {
    out << "    " << format_issue(issue) << "\n";
  }
  out << "  dap hypotheses: " << (cert.dap.concludes_dap ? "hold" : "fail") << "\n";
  for (const auto& issue : cert.dap.failures) out << "    " << format_issue(issue) << "\n";
  if (!cert.properties.empty()) {
    out << "  certified:";
    for (const auto& p : cert.properties) out << " " << p;
    out << "\n";
  }

  // Metric conditions at the requested depth.
  const DiagramReport report = validate_diagram(*diagram);
  if (report.expandable()) {
    ExpandResult expansion = expand(*diagram, report, depth);
    if (expansion.ok() && expansion.levels.size() >= 2) {
      out << "  components per level:";
      for (std::size_t count : component_counts(expansion.levels)) out << " " << count;
      out << "\n";
      const LipschitzReport lipschitz = check_lipschitz(expansion.levels, *schedule, limit);
      out << "  bonding maps 1-Lipschitz (" << lipschitz.pairs_checked
          << " vertex pairs): " << (lipschitz.pass ? "pass" : "FAIL") << "\n";
      for (const auto& v : lipschitz.violations) {
        out << "    level " << v.level << ": d(p(" << v.u << "), p(" << v.v
            << ")) = " << rational_to_string(v.image_distance) << " > "
            << rational_to_string(v.distance) << "\n";
      }
      for (int i = 1; i < static_cast<int>(expansion.levels.size()); ++i) {
        out << "  mesh bound at level " << i << ": "
            << rational_to_string(mesh_bound(expansion.levels, *schedule, i)) << "\n";
      }
      const auto tail = mesh_tail(*diagram, *schedule, 1);
      if (tail) {
        out << "  mesh tail from level 1: " << rational_to_string(*tail)
            << " (halves per level)\n";
      } else {
        out << "  mesh tail: divergent for this schedule\n";
      }
    }
  }

  fs::create_directories(out_dir.empty() ? "." : out_dir);
  const fs::path cert_path = fs::path(out_dir.empty() ? "." : out_dir) /
                             (diagram->name + ".mcert");
  if (!write_file(cert_path, serialize_certificate(cert, stamp), err)) return kValidationFailure;
  out << "wrote " << cert_path.string() << "\n";

  if (!require.empty()) {
    bool met = false;
    for (const auto& p : cert.properties) met = met || p == require;
    if (!met) {
      err << "required property '" << require << "' is not certified\n";
      return kHypothesisUnmet;
    }
  }
  return kOk;
}

int cmd_sections(const DiagramSource& source, int level, const std::string& out_dir,
                 std::ostream& out, std::ostream& err) {
  auto diagram = load_diagram(source, err);
  if (!diagram) return kValidationFailure;
  const DiagramReport report = validate_diagram(*diagram);
  if (!report.valid()) {
    err << "error: diagram does not validate\n";
    for (const auto& issue : report.all_issues()) err << "  " << format_issue(issue) << "\n";
    return kValidationFailure;
  }
  const DapVerdict dap = check_dap(*diagram, report);
  if (!dap.concludes_dap) {
    err << "disjoint-arcs hypotheses fail; no section construction\n";
    for (const auto& issue : dap.failures) err << "  " << format_issue(issue) << "\n";
    return kHypothesisUnmet;
  }

  ExpandResult expansion = expand(*diagram, report, level + 1);
  if (!expansion.ok()) {
    for (const auto& issue : expansion.issues) err << format_issue(issue) << "\n";
    return kInternalError;
  }
  SectionsResult built = build_sections(*diagram, report, expansion.levels, level);
  if (!built.ok()) {
    err << "section construction failed\n";
    for (const auto& issue : built.issues) err << "  " << format_issue(issue) << "\n";
    return kHypothesisUnmet;
  }
  const std::vector<Issue> verification = verify_sections(expansion.levels, *built.sections);

  Certificate shell;  // reuse the certificate writer for the witness block
  SectionWitness witness;
  witness.sections = *built.sections;
  witness.verified = verification.empty();
  witness.issues = verification;

  out << "sections at level " << level << ": f/g built over "
      << expansion.levels[level - 1].graph.vertex_count() << " vertices and "
      << expansion.levels[level - 1].graph.edge_count() << " edges\n";
  for (const auto& [production, feas] : built.sections->feasibility) {
    out << "  pairing table " << production << ": straight "
        << (feas.straight ? "feasible" : "infeasible") << ", crossed "
        << (feas.crossed ? "feasible" : "infeasible") << "\n";
  }
  out << "  verification: " << (witness.verified ? "pass" : "FAIL") << "\n";
  for (const auto& issue : verification) out << "    " << format_issue(issue) << "\n";

  shell.sections.push_back(std::move(witness));
  std::string text = serialize_certificate(shell);
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    const fs::path path =
        fs::path(out_dir) / (diagram->name + "_sections_" + std::to_string(level) + ".txt");
    if (!write_file(path, text, err)) return kValidationFailure;
    out << "wrote " << path.string() << "\n";
  }
  return verification.empty() ? kOk : kHypothesisUnmet;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Markov diagram engine and checker"};
  app.set_version_flag("--version", std::string(version_string()));
  app.require_subcommand(1);

  DiagramSource validate_source;
  CLI::App* validate = app.add_subcommand("validate", "parse and fully validate a diagram");
  validate_source.attach(validate);

  DiagramSource expand_source;
  int expand_depth = 4;
  std::string expand_out = "out";
  std::string expand_format = "dot";
  CLI::App* expand_cmd =
      app.add_subcommand("expand", "expand a diagram and write per-level artifacts");
  expand_source.attach(expand_cmd);
  expand_cmd->add_option("--depth", expand_depth, "levels to expand")
      ->check(CLI::Range(1, 1000000));
  expand_cmd->add_option("--out", expand_out, "output directory");
  expand_cmd->add_option("--format", expand_format, "graph export format (dot|json)");

  DiagramSource check_source;
  int check_depth = 5;
  std::string check_out;
  std::string check_schedule = "halving";
  std::string check_kappa = "1";
  std::string check_require;
  std::size_t check_limit = 10;
  bool check_stamp = false;
  CLI::App* check = app.add_subcommand("check", "certify topological properties");
  check_source.attach(check);
  check->add_option("--depth", check_depth, "expansion depth for finite-level checks")
      ->check(CLI::Range(1, 1000000));
  check->add_option("--out", check_out, "directory for the certificate");
  check->add_option("--schedule", check_schedule, "metric schedule (halving|constant|list:...)");
  check->add_option("--kappa", check_kappa, "scale of level 1 (positive rational)");
  check->add_option("--require", check_require,
                    "exit 2 unless this property is certified "
                    "(connected|locally-connected|dap|menger-curve)");
  check->add_option("--limit", check_limit, "max reported Lipschitz violations");
  check->add_flag("--stamp", check_stamp, "embed a wall-clock timestamp in the certificate");

  DiagramSource sections_source;
  int sections_level = 1;
  std::string sections_out;
  CLI::App* sections = app.add_subcommand("sections", "build disjoint bonding-map sections");
  sections_source.attach(sections);
  sections->add_option("--level", sections_level, "base level i of the sections K_i -> K_{i+1}")
      ->check(CLI::Range(1, 1000000));
  sections->add_option("--out", sections_out, "directory for the witness file");

  std::vector<const char*> args;
  args.push_back("markov");
  for (const auto& a : argv) args.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  }

  try {
    if (validate->parsed()) return cmd_validate(validate_source, out, err);
    if (expand_cmd->parsed()) {
      return cmd_expand(expand_source, expand_depth, expand_out, expand_format, out, err);
    }
    if (check->parsed()) {
      return cmd_check(check_source, check_depth, check_out, check_schedule, check_kappa,
                       check_require, check_limit, check_stamp, out, err);
    }
    if (sections->parsed()) return cmd_sections(sections_source, sections_level, sections_out, out, err);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  err << "error: no command\n";
  return kValidationFailure;
}

}  // namespace markov::cli
