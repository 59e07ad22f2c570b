#include <doctest.h>

#include <set>

#include "markov/builtins.hpp"
#include "markov/decomposition_check.hpp"
#include "markov/dsl.hpp"
#include "markov/expansion.hpp"
#include "markov/graph_algorithms.hpp"
#include "markov/projection.hpp"
#include "test_support.hpp"

using namespace markov;
using namespace markov::testing;

namespace {

ExpandResult expand_builtin(const std::string& name, int depth) {
  const auto d = builtin_diagram(name).value();
  auto result = expand(d, depth);
  REQUIRE(result.ok());
  REQUIRE(result.levels.size() == static_cast<std::size_t>(depth));
  return result;
}

}  // namespace

TEST_CASE("assignments on the 1-8 start edge") {
  const auto d = builtin_diagram("one_eight").value();
  const auto report = validate_diagram(d);
  const auto assignment = assign_productions(d.start, report);
  CHECK(assignment.vertex_production.at("v1") == "P_1");
  CHECK(assignment.vertex_production.at("v2") == "P_1");
  CHECK(assignment.edge_production.at("e").production == "P_8");
  CHECK(assignment.edge_production.at("e").tail == "v1");  // lexicographic orientation
  CHECK(assignment.edge_production.at("e").head == "v2");
}

TEST_CASE("suspension orientation is forced by endpoint colors") {
  const auto d = builtin_diagram("suspension").value();
  const auto report = validate_diagram(d);
  const auto assignment = assign_productions(d.start, report);
  // Both start edges run between an end vertex (tail color) and the middle.
  CHECK(assignment.edge_production.at("e1").tail == "n");
  CHECK(assignment.edge_production.at("e1").head == "m");
  CHECK(assignment.edge_production.at("e2").tail == "s");
  CHECK(assignment.edge_production.at("e2").head == "m");
}

TEST_CASE("one_eight level counts match the growth recurrence, cross-validated") {
  const int depth = 6;
  const auto result = expand_builtin("one_eight", depth);
  long long v = 2, e = 1;
  for (int i = 0; i < depth; ++i) {
    CHECK(result.levels[i].graph.vertex_count() == static_cast<std::size_t>(v));
    CHECK(result.levels[i].graph.edge_count() == static_cast<std::size_t>(e));
    const long long nv = 2 * v + 2 * e;
    const long long ne = v + 5 * e;
    v = nv;
    e = ne;
  }
}

TEST_CASE("cantor levels are discrete with doubling cardinality") {
  const auto result = expand_builtin("cantor", 8);
  std::size_t expected = 1;
  for (const auto& level : result.levels) {
    CHECK(level.graph.vertex_count() == expected);
    CHECK(level.graph.edge_count() == 0);
    expected *= 2;
  }
}

TEST_CASE("solenoid levels are single cycles of length 3 * 2^(n-1)") {
  const auto result = expand_builtin("solenoid", 8);
  std::size_t expected = 3;
  for (const auto& level : result.levels) {
    CHECK(level.graph.vertex_count() == expected);
    CHECK(level.graph.edge_count() == expected);
    CHECK(connected_components(level.graph).size() == 1);
    for (const auto& v : level.graph.vertices()) {
      CHECK(level.graph.incident_edges(v.id).size() == 2);
    }
    expected *= 2;
  }
}

TEST_CASE("diamond levels follow V' = V + 2E, E' = 4E") {
  const auto result = expand_builtin("diamond", 5);
  long long v = 2, e = 1;
  for (const auto& level : result.levels) {
    CHECK(level.graph.vertex_count() == static_cast<std::size_t>(v));
    CHECK(level.graph.edge_count() == static_cast<std::size_t>(e));
    const long long nv = v + 2 * e;
    e = 4 * e;
    v = nv;
  }
}

TEST_CASE("join levels follow V' = 2V, E' = 4E") {
  const auto result = expand_builtin("join", 4);
  CHECK(result.levels[2].graph.vertex_count() == 8);
  CHECK(result.levels[2].graph.edge_count() == 16);
  CHECK(result.levels[3].graph.vertex_count() == 16);
  CHECK(result.levels[3].graph.edge_count() == 64);
}

TEST_CASE("suspension levels are bipartite poles-to-interior graphs") {
  const auto result = expand_builtin("suspension", 6);
  std::size_t hollows = 1;
  for (const auto& level : result.levels) {
    CHECK(level.graph.vertex_count() == 2 + hollows);
    CHECK(level.graph.edge_count() == 2 * hollows);
    hollows *= 2;
  }
}

TEST_CASE("depth 1 expansion is the start graph") {
  const auto d = builtin_diagram("one_eight").value();
  const auto result = expand(d, 1);
  REQUIRE(result.ok());
  REQUIRE(result.levels.size() == 1);
  CHECK(result.levels[0].graph == d.start);
  CHECK(!result.levels[0].step.has_value());
  CHECK_THROWS_AS((void)expand(d, 0), std::invalid_argument);
}

TEST_CASE("expansion is deterministic across runs and yields valid graphs") {
  for (const auto& name : builtin_names()) {
    const auto d = builtin_diagram(name).value();
    const auto a = expand(d, 4);
    const auto b = expand(d, 4);
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    for (int i = 0; i < 4; ++i) {
      CHECK(a.levels[i].graph == b.levels[i].graph);
      CHECK(validate_graph(a.levels[i].graph).empty());
      if (a.levels[i].step) {
        CHECK(a.levels[i].step->bonding == b.levels[i].step->bonding);
      }
    }
  }
}

TEST_CASE("vertex counts match the chart recount") {
  // |V(K_{n+1})| = sum of vertex-top sizes + sum over edges of (top size
  // minus glued fiber vertices), recounted from the assembly and charts.
  for (const auto& name : builtin_names()) {
    const auto d = builtin_diagram(name).value();
    const auto result = expand(d, 4);
    REQUIRE(result.ok());
    for (std::size_t i = 1; i < result.levels.size(); ++i) {
      const auto& step = *result.levels[i].step;
      long long total = 0;
      for (const auto& node : step.assembly.nodes) {
        const Production* p = d.find_production(node.production);
        total += static_cast<long long>(p->top.vertex_count());
      }
      for (const auto& arc : step.assembly.arcs) {
        const Gluing* g = d.find_gluing(arc.gluing);
        total -= static_cast<long long>(d.find_production(g->src)->top.vertex_count());
      }
      CHECK(total == static_cast<long long>(result.levels[i].graph.vertex_count()));
    }
  }
}

TEST_CASE("bonding maps of all-quasi-simplicial diagrams classify quasi-simplicial") {
  for (const auto& name : {"one_eight", "diamond"}) {
    const auto d = builtin_diagram(name).value();
    const auto result = expand(d, 5);
    REQUIRE(result.ok());
    for (std::size_t i = 1; i < result.levels.size(); ++i) {
      const auto cls = classify_map(result.levels[i].graph, result.levels[i - 1].graph,
                                    result.levels[i].step->bonding);
      CHECK(cls.valid);
      CHECK(cls.quasi_simplicial);
    }
  }
}

TEST_CASE("bonding maps of mixed diagrams stay valid and classify per edge") {
  // The suspension mixes degenerate vertex rules with a full-edge
  // production: its bonding maps are simplicial but not quasi-simplicial.
  const auto d = builtin_diagram("suspension").value();
  const auto result = expand(d, 4);
  REQUIRE(result.ok());
  for (std::size_t i = 1; i < result.levels.size(); ++i) {
    const auto cls = classify_map(result.levels[i].graph, result.levels[i - 1].graph,
                                  result.levels[i].step->bonding);
    CHECK(cls.valid);
    CHECK(cls.simplicial);
    CHECK(!cls.quasi_simplicial);
    bool saw_full_edge = false;
    for (const auto& [_, shape] : cls.edge_shapes) {
      saw_full_edge = saw_full_edge || shape == EdgeImageShape::FullEdge;
    }
    CHECK(saw_full_edge);
  }
}

TEST_CASE("decomposition re-verification passes on engine output") {
  for (const auto& name : builtin_names()) {
    const auto d = builtin_diagram(name).value();
    const auto result = expand(d, 4);
    REQUIRE(result.ok());
    const auto issues = verify_expansion(d, result.levels);
    for (const auto& issue : issues) {
      FAIL_CHECK(name << ": " << format_issue(issue));
    }
    CHECK(issues.empty());
  }
}

TEST_CASE("swapping the gluing labels on the assembly arcs is caught") {
  const auto d = builtin_diagram("one_eight").value();
  auto result = expand(d, 2);
  REQUIRE(result.ok());
  auto& step = *result.levels[1].step;
  for (auto& arc : step.assembly.arcs) {
    arc.gluing = arc.gluing == "G_l" ? "G_r" : "G_l";
  }
  const auto issues =
      verify_decomposition(d, result.levels[0].graph, result.levels[1].graph, step);
  CHECK(!issues.empty());
  bool commutativity_or_coherence = false;
  for (const auto& issue : issues) {
    commutativity_or_coherence = commutativity_or_coherence ||
                                 issue.code == "CommutativityFailure" ||
                                 issue.code == "ChartCoherenceFailure";
  }
  CHECK(commutativity_or_coherence);
}

TEST_CASE("corrupting a chart image is caught by the re-verifier") {
  const auto d = builtin_diagram("one_eight").value();
  auto result = expand(d, 3);
  REQUIRE(result.ok());
  auto& step = *result.levels[1].step;
  // Relabel one image vertex of the edge chart to some other level-2 vertex.
  auto& image = step.chart.entries.front().top.vertex_image;
  REQUIRE(!image.empty());
  const std::string original = image.begin()->second;
  for (const auto& v : result.levels[1].graph.vertices()) {
    if (v.id != original) {
      image.begin()->second = v.id;
      break;
    }
  }
  const auto issues =
      verify_decomposition(d, result.levels[0].graph, result.levels[1].graph, step);
  CHECK(!issues.empty());
}

TEST_CASE("a diagram gluing distinct instances onto one fiber pair collides") {
  // The color-0 edge production carries a color-2 edge between its two tail
  // fiber vertices, which no gluing identifies across neighbours. Two edges
  // sharing the tail vertex then produce parallel color-2 edges between the
  // same identified endpoints: the engine must refuse.
  MarkovDiagram d;
  d.name = "collision";
  d.palette = {{0, "a"}, {1, "b"}, {2, "c"}};
  d.start = make_graph({{"u", 0}, {"w1", 1}, {"w2", 1}},
                       {{"e1", "u", "w1", 0}, {"e2", "u", "w2", 0}});
  d.productions.push_back({"VP0",
                           make_graph({{"x", 0}, {"y", 0}}, {}),
                           make_graph({{"w", 0}}, {}),
                           {{"x", at_vertex("w")}, {"y", at_vertex("w")}}});
  d.productions.push_back({"VP1",
                           make_graph({{"z", 1}}, {}),
                           make_graph({{"w", 1}}, {}),
                           {{"z", at_vertex("w")}}});
  d.productions.push_back({"EP",
                           make_graph({{"a", 0}, {"b", 0}, {"c", 1}},
                                      {{"t1", "a", "b", 2}, {"t2", "b", "c", 0}}),
                           make_graph({{"bt", 0}, {"bh", 1}}, {{"be", "bt", "bh", 0}}),
                           {{"a", at_vertex("bt")}, {"b", at_vertex("bt")}, {"c", at_vertex("bh")}}});
  // Color-2 edges (between two color-0 vertices) get their own doubling
  // production so that coverage stays complete.
  d.productions.push_back({"EP2",
                           make_graph({{"p0", 0}, {"p1", 0}, {"q0", 0}, {"q1", 0}},
                                      {{"f1", "p0", "q0", 2}, {"f2", "p1", "q1", 2}}),
                           make_graph({{"b0", 0}, {"b1", 0}}, {{"be", "b0", "b1", 2}}),
                           {{"p0", at_vertex("b0")},
                            {"p1", at_vertex("b0")},
                            {"q0", at_vertex("b1")},
                            {"q1", at_vertex("b1")}}});
  d.gluings.push_back({"Gt", "VP0", "EP", {{"x", "a"}, {"y", "b"}}, {{"w", "bt"}}});
  d.gluings.push_back({"Gh", "VP1", "EP", {{"z", "c"}}, {{"w", "bh"}}});
  d.gluings.push_back({"G2t", "VP0", "EP2", {{"x", "p0"}, {"y", "p1"}}, {{"w", "b0"}}});
  d.gluings.push_back({"G2h", "VP0", "EP2", {{"x", "q0"}, {"y", "q1"}}, {{"w", "b1"}}});
  d.normalize();

  const auto report = validate_diagram(d);
  REQUIRE(report.expandable());
  const auto result = expand(d, 2);
  CHECK(!result.ok());
  CHECK(has_issue(result.issues, "UnintendedCollision"));
}

TEST_CASE("projection composes bonding maps into iterated subdivisions") {
  SUBCASE("identity at equal levels") {
    const auto levels = expand_builtin("one_eight", 3).levels;
    const auto pi = project(levels, 2, 2);
    for (const auto& v : levels[1].graph.vertices()) {
      CHECK(pi.vertex_image.at(v.id) == v.id);
    }
  }
  SUBCASE("cantor projection K_4 -> K_2 is 4-to-1") {
    const auto levels = expand_builtin("cantor", 4).levels;
    const auto pi = project(levels, 4, 2);
    std::map<std::string, int> fibers;
    for (const auto& [_, img] : pi.vertex_image) ++fibers[img];
    CHECK(fibers.size() == 2);
    for (const auto& [_, count] : fibers) CHECK(count == 4);
  }
  SUBCASE("one_eight K_3 lands in the twice-subdivided single edge") {
    const auto levels = expand_builtin("one_eight", 3).levels;
    const auto pi = project(levels, 3, 1);
    // beta^2 of a single edge: a path with 5 vertices and 4 edges.
    CHECK(pi.target.vertex_count() == 5);
    CHECK(pi.target.edge_count() == 4);
    for (const auto& v : levels[2].graph.vertices()) {
      CHECK(pi.target.has_vertex(pi.vertex_image.at(v.id)));
    }
    // Edges of K_3 must land on simplices of the target.
    for (const auto& e : levels[2].graph.edges()) {
      const std::string a = pi.vertex_image.at(e.ends[0]);
      const std::string b = pi.vertex_image.at(e.ends[1]);
      CHECK((a == b || pi.target.find_edge_between(a, b) != nullptr));
    }
  }
  SUBCASE("out of range levels throw") {
    const auto levels = expand_builtin("cantor", 2).levels;
    CHECK_THROWS_AS((void)project(levels, 3, 1), std::out_of_range);
    CHECK_THROWS_AS((void)project(levels, 1, 0), std::out_of_range);
  }
}
