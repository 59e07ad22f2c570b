#include <doctest.h>

#include <set>

#include "markov/builtins.hpp"
#include "markov/graph_algorithms.hpp"
#include "markov/sections.hpp"
#include "test_support.hpp"

using namespace markov;
using namespace markov::testing;

TEST_CASE("only the crossed pairing is feasible for the 8-production") {
  const auto d = builtin_diagram("one_eight").value();
  const auto report = validate_diagram(d);
  const auto table = pairing_feasibility(d, report);
  REQUIRE(table.count("P_8") == 1);
  CHECK(!table.at("P_8").straight);
  CHECK(table.at("P_8").crossed);
  REQUIRE(table.at("P_8").crossed_paths.has_value());
  // Both crossed paths are the 2-edge routes through the barycenter fiber.
  CHECK(table.at("P_8").crossed_paths->first.size() == 3);
  CHECK(table.at("P_8").crossed_paths->second.size() == 3);
}

TEST_CASE("sections at level 1 of one_eight") {
  const auto d = builtin_diagram("one_eight").value();
  const auto report = validate_diagram(d);
  const auto levels = expand(d, report, 2).levels;
  const auto built = build_sections(d, report, levels, 1);
  REQUIRE(built.ok());
  const auto& s = *built.sections;

  // f maps the single edge onto a 2-edge monotone path; images disjoint.
  REQUIRE(s.f_path.count("e") == 1);
  CHECK(s.f_path.at("e").size() == 3);
  CHECK(s.g_path.at("e").size() == 3);
  CHECK(s.edge_crossed.at("e"));

  std::set<std::string> f_image(s.f_path.at("e").begin(), s.f_path.at("e").end());
  for (const auto& v : s.g_path.at("e")) CHECK(f_image.count(v) == 0);

  CHECK(verify_sections(levels, s).empty());
}

TEST_CASE("sections at levels up to 4, with independent verification") {
  const auto d = builtin_diagram("one_eight").value();
  const auto report = validate_diagram(d);
  const auto levels = expand(d, report, 5).levels;
  for (int i = 1; i <= 4; ++i) {
    const auto built = build_sections(d, report, levels, i);
    REQUIRE(built.ok());
    const auto issues = verify_sections(levels, *built.sections);
    for (const auto& issue : issues) FAIL_CHECK("level " << i << ": " << format_issue(issue));
    CHECK(issues.empty());
    // Crossed-only pairing means the fiber choices 2-color the level.
    for (const auto& [_, crossed] : built.sections->edge_crossed) CHECK(crossed);
    CHECK(bipartition(levels[i - 1].graph).has_value());
  }
}

TEST_CASE("verification notices corrupted witnesses") {
  const auto d = builtin_diagram("one_eight").value();
  const auto report = validate_diagram(d);
  const auto levels = expand(d, report, 3).levels;
  auto built = build_sections(d, report, levels, 2);
  REQUIRE(built.ok());

  SUBCASE("swapping one fiber choice breaks disjointness") {
    auto s = *built.sections;
    const auto first = s.f_vertex.begin()->first;
    s.f_vertex[first] = s.g_vertex.at(first);
    CHECK(!verify_sections(levels, s).empty());
  }
  SUBCASE("truncating a path breaks the monotone section property") {
    auto s = *built.sections;
    auto& path = s.f_path.begin()->second;
    path.pop_back();
    CHECK(!verify_sections(levels, s).empty());
  }
}

TEST_CASE("diagrams failing the dap shape are rejected before construction") {
  const auto d = builtin_diagram("diamond").value();
  const auto report = validate_diagram(d);
  const auto levels = expand(d, report, 2).levels;
  const auto built = build_sections(d, report, levels, 1);
  CHECK(!built.ok());
  CHECK(has_issue(built.issues, "PreconditionFailed"));
}

TEST_CASE("an odd start cycle makes the crossed-only constraints unsatisfiable") {
  // Same productions and gluings as one_eight, but the starting graph is a
  // triangle. Crossed-only pairings demand a proper 2-coloring, which an odd
  // cycle cannot supply: the construction must fail with a witness, without
  // refuting the disjoint arcs property itself.
  auto d = builtin_diagram("one_eight").value();
  d.name = "one_eight_triangle";
  d.start = make_cycle(3);
  const auto report = validate_diagram(d);
  REQUIRE(report.expandable());
  const auto levels = expand(d, report, 2).levels;
  const auto built = build_sections(d, report, levels, 1);
  CHECK(!built.ok());
  CHECK(has_issue(built.issues, "ConstructionFailed"));
}

TEST_CASE("a top admitting both pairings leaves the choice free") {
  // K_{2,2} tops with canonical vertex productions route either way.
  MarkovDiagram d;
  d.name = "both_pairings";
  d.palette = {{0, "black"}};
  d.start = make_graph({{"u", 0}, {"w", 0}}, {{"e", "u", "w", 0}});
  d.productions.push_back({"V",
                           make_graph({{"p", 0}, {"q", 0}}, {{"pq", "p", "q", 0}}),
                           make_graph({{"w", 0}}, {}),
                           {{"p", at_vertex("w")}, {"q", at_vertex("w")}}});
  // Tail fiber {t1,t2} with edge, head fiber {h1,h2} with edge, and both
  // middles joined to everything: straight and crossed routes both exist.
  d.productions.push_back(
      {"E",
       make_graph({{"t1", 0}, {"t2", 0}, {"h1", 0}, {"h2", 0}, {"m1", 0}, {"m2", 0}},
                  {{"ft", "t1", "t2", 0},
                   {"fh", "h1", "h2", 0},
                   {"a1", "t1", "m1", 0},
                   {"a2", "m1", "h1", 0},
                   {"b1", "t2", "m2", 0},
                   {"b2", "m2", "h2", 0},
                   {"x1", "t1", "m2", 0},
                   {"x2", "m1", "h2", 0},
                   {"x3", "t2", "m1", 0},
                   {"x4", "m2", "h1", 0}}),
       make_graph({{"bt", 0}, {"bh", 0}}, {{"be", "bt", "bh", 0}}),
       {{"t1", at_vertex("bt")},
        {"t2", at_vertex("bt")},
        {"h1", at_vertex("bh")},
        {"h2", at_vertex("bh")},
        {"m1", at_barycenter("be")},
        {"m2", at_barycenter("be")}}});
  d.gluings.push_back({"Gt", "V", "E", {{"p", "t1"}, {"q", "t2"}}, {{"w", "bt"}}});
  d.gluings.push_back({"Gh", "V", "E", {{"p", "h1"}, {"q", "h2"}}, {{"w", "bh"}}});
  d.normalize();

  const auto report = validate_diagram(d);
  REQUIRE(report.expandable());
  const auto table = pairing_feasibility(d, report);
  CHECK(table.at("E").straight);
  CHECK(table.at("E").crossed);

  const auto levels = expand(d, report, 2).levels;
  const auto built = build_sections(d, report, levels, 1);
  REQUIRE(built.ok());
  CHECK(verify_sections(levels, *built.sections).empty());
}
