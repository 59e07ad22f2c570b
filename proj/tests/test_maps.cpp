#include <doctest.h>

#include "markov/builtins.hpp"
#include "markov/maps.hpp"
#include "test_support.hpp"

using namespace markov;
using namespace markov::testing;

namespace {

const Production& production_of(const MarkovDiagram& d, const std::string& name) {
  const Production* p = d.find_production(name);
  REQUIRE(p != nullptr);
  return *p;
}

}  // namespace

TEST_CASE("the 8-production map is quasi-simplicial but not simplicial") {
  const auto d = builtin_diagram("one_eight").value();
  const auto& p8 = production_of(d, "P_8");
  const auto cls = classify_map(p8.top, p8.bottom, p8.map);
  CHECK(cls.valid);
  CHECK(cls.quasi_simplicial);
  CHECK(!cls.simplicial);
  // The chord C-F degenerates onto the barycenter.
  CHECK(cls.edge_shapes.at("eCF") == EdgeImageShape::Degenerate);
  CHECK(cls.edge_shapes.at("eBC") == EdgeImageShape::HalfEdge);
}

TEST_CASE("a map collapsing every edge carries both classification flags") {
  const auto d = builtin_diagram("one_eight").value();
  const auto& p1 = production_of(d, "P_1");
  const auto cls = classify_map(p1.top, p1.bottom, p1.map);
  CHECK(cls.valid);
  CHECK(cls.simplicial);
  CHECK(cls.quasi_simplicial);
}

TEST_CASE("identity on a single edge is simplicial but not quasi-simplicial") {
  const auto g = make_graph({{"a", 0}, {"b", 0}}, {{"e", "a", "b", 0}});
  std::map<std::string, SubdivisionPoint> image{{"a", at_vertex("a")}, {"b", at_vertex("b")}};
  const auto cls = classify_map(g, g, image);
  CHECK(cls.valid);
  CHECK(cls.simplicial);
  CHECK(!cls.quasi_simplicial);
  CHECK(cls.edge_shapes.at("e") == EdgeImageShape::FullEdge);
}

TEST_CASE("solenoid strand production is simplicial, not quasi-simplicial") {
  const auto d = builtin_diagram("solenoid").value();
  const auto& s = production_of(d, "S");
  const auto cls = classify_map(s.top, s.bottom, s.map);
  CHECK(cls.valid);
  CHECK(cls.simplicial);
  CHECK(!cls.quasi_simplicial);
}

TEST_CASE("illegal edge images are flagged with the edge id") {
  const auto dom = make_graph({{"a", 0}, {"b", 0}}, {{"e", "a", "b", 0}});
  const auto cod = make_graph({{"x", 0}, {"y", 0}, {"z", 0}},
                              {{"e1", "x", "y", 0}, {"e2", "y", "z", 0}});
  SUBCASE("two distinct barycenters") {
    std::map<std::string, SubdivisionPoint> image{{"a", at_barycenter("e1")},
                                                  {"b", at_barycenter("e2")}};
    const auto cls = classify_map(dom, cod, image);
    CHECK(!cls.valid);
    CHECK(has_issue(cls.issues, "InvalidEdgeImage", "e"));
  }
  SUBCASE("vertex off the named edge") {
    std::map<std::string, SubdivisionPoint> image{{"a", at_vertex("z")},
                                                  {"b", at_barycenter("e1")}};
    const auto cls = classify_map(dom, cod, image);
    CHECK(!cls.valid);
  }
  SUBCASE("non-adjacent vertex pair") {
    std::map<std::string, SubdivisionPoint> image{{"a", at_vertex("x")}, {"b", at_vertex("z")}};
    CHECK(!classify_map(dom, cod, image).valid);
  }
}

TEST_CASE("the left gluing's top map is a colored embedding") {
  const auto d = builtin_diagram("one_eight").value();
  const auto& p1 = production_of(d, "P_1");
  const auto& p8 = production_of(d, "P_8");
  const auto check = check_colored_embedding(p1.top, p8.top, d.find_gluing("G_l")->top_map);
  CHECK(check.ok);
  CHECK(check.edge_image.at("pq") == "eDE");
}

TEST_CASE("collapsing maps and color swaps fail the embedding check") {
  const auto edge = make_graph({{"a", 0}, {"b", 0}}, {{"e", "a", "b", 0}});
  SUBCASE("collapse loses the edge") {
    const auto point = make_graph({{"x", 0}}, {});
    const auto check = check_colored_embedding(edge, point, {{"a", "x"}, {"b", "x"}});
    CHECK(!check.ok);
    CHECK(has_issue(check.issues, "NotInjective"));
    CHECK(has_issue(check.issues, "EdgeNotPreserved", "e"));
  }
  SUBCASE("edge color mismatch") {
    const auto recolored = make_graph({{"a", 0}, {"b", 0}}, {{"e", "a", "b", 1}});
    const auto check = check_colored_embedding(edge, recolored, {{"a", "a"}, {"b", "b"}});
    CHECK(!check.ok);
    CHECK(has_issue(check.issues, "ColorMismatch", "e"));
  }
}

TEST_CASE("colored isomorphism on single edges respects colors") {
  const auto a = make_graph({{"a", 0}, {"b", 0}}, {{"e", "a", "b", 0}});
  const auto b = make_graph({{"x", 0}, {"y", 0}}, {{"f", "x", "y", 0}});
  CHECK(colored_isomorphism(a, b).has_value());
  const auto recolored = make_graph({{"x", 0}, {"y", 0}}, {{"f", "x", "y", 2}});
  CHECK(!colored_isomorphism(a, recolored).has_value());
}

TEST_CASE("the 8-graph is not isomorphic to the plain hexagon") {
  // Degree sequences differ (two degree-3 vertices vs none); the backtracking
  // search confirms emptiness exhaustively.
  CHECK(!colored_isomorphism(make_eight_graph(), make_cycle(6)).has_value());
  CHECK(colored_isomorphism(make_eight_graph(), make_eight_graph()).has_value());
}

TEST_CASE("isomorphism existence is symmetric") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    const auto a = random_graph(rng, 6, 2);
    const auto b = random_graph(rng, 6, 2);
    CHECK(colored_isomorphism(a, b).has_value() == colored_isomorphism(b, a).has_value());
  }
}

namespace {

ColoredGraph relabel(const ColoredGraph& g, const std::map<std::string, std::string>& rename) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (const auto& v : g.vertices()) vs.push_back({rename.at(v.id), v.color});
  for (const auto& e : g.edges()) {
    es.push_back({e.id, {rename.at(e.ends[0]), rename.at(e.ends[1])}, e.color});
  }
  return ColoredGraph(std::move(vs), std::move(es));
}

}  // namespace

TEST_CASE("classification is stable under composition with isomorphisms on either side") {
  const auto d = builtin_diagram("one_eight").value();
  const auto& p8 = production_of(d, "P_8");
  const auto base = classify_map(p8.top, p8.bottom, p8.map);

  std::mt19937_64 rng(3);
  std::vector<std::string> names = {"n0", "n1", "n2", "n3", "n4", "n5"};
  for (int round = 0; round < 10; ++round) {
    // Precompose with an isomorphic relabeling of the top.
    std::shuffle(names.begin(), names.end(), rng);
    std::map<std::string, std::string> rename;
    int i = 0;
    for (const auto& v : p8.top.vertices()) rename[v.id] = names[i++];
    const ColoredGraph relabeled_top = relabel(p8.top, rename);
    const auto iso = colored_isomorphism(relabeled_top, p8.top);
    REQUIRE(iso.has_value());
    std::map<std::string, SubdivisionPoint> composed;
    for (const auto& [from, to] : *iso) composed[from] = p8.map.at(to);
    const auto cls = classify_map(relabeled_top, p8.bottom, composed);
    CHECK(cls.valid == base.valid);
    CHECK(cls.simplicial == base.simplicial);
    CHECK(cls.quasi_simplicial == base.quasi_simplicial);

    // Postcompose with an isomorphic relabeling of the bottom. Barycenter
    // targets ride along the induced edge map (edge ids are preserved by
    // the relabeling, so only vertex targets move).
    std::map<std::string, std::string> bottom_rename{{"bt", round % 2 ? "L" : "R"},
                                                     {"bh", round % 2 ? "R" : "L"}};
    const ColoredGraph relabeled_bottom = relabel(p8.bottom, bottom_rename);
    std::map<std::string, SubdivisionPoint> pushed;
    for (const auto& [from, to] : p8.map) {
      pushed[from] = to.kind == SubdivisionPoint::Kind::Vertex
                         ? at_vertex(bottom_rename.at(to.id))
                         : to;
    }
    const auto cls2 = classify_map(p8.top, relabeled_bottom, pushed);
    CHECK(cls2.valid == base.valid);
    CHECK(cls2.simplicial == base.simplicial);
    CHECK(cls2.quasi_simplicial == base.quasi_simplicial);
  }
}
