#include <doctest.h>

#include "markov/colored_graph.hpp"
#include "markov/subdivision.hpp"
#include "test_support.hpp"

using namespace markov;
using namespace markov::testing;

TEST_CASE("single edge graph validates") {
  const auto g = make_graph({{"a", 0}, {"b", 0}}, {{"e", "a", "b", 0}});
  CHECK(validate_graph(g).empty());
}

TEST_CASE("edge referencing a missing vertex is a dangling endpoint") {
  const auto g = make_graph({{"a", 0}}, {{"e", "a", "ghost", 0}});
  const auto issues = validate_graph(g);
  CHECK(has_issue(issues, "DanglingEndpoint", "e"));
}

TEST_CASE("the 8-graph validates") {
  CHECK(validate_graph(make_eight_graph()).empty());
}

TEST_CASE("self loops, duplicate ids and parallel edges are rejected") {
  const auto loop = make_graph({{"a", 0}}, {{"e", "a", "a", 0}});
  CHECK(has_issue(validate_graph(loop), "SelfLoop", "e"));

  const auto dup = ColoredGraph({{"a", 0}, {"a", 1}}, {});
  CHECK(has_issue(validate_graph(dup), "DuplicateId", "a"));

  const auto multi =
      make_graph({{"a", 0}, {"b", 0}}, {{"e1", "a", "b", 0}, {"e2", "b", "a", 1}});
  CHECK(has_issue(validate_graph(multi), "DuplicateEdge"));
}

TEST_CASE("vertices and edges iterate in sorted order") {
  const auto g = make_graph({{"z", 0}, {"a", 0}, {"m", 0}}, {{"e2", "z", "a", 0}, {"e1", "m", "a", 0}});
  CHECK(g.vertices()[0].id == "a");
  CHECK(g.vertices()[2].id == "z");
  CHECK(g.edges()[0].id == "e1");
}

TEST_CASE("subdivision of a single edge gives 3 vertices and 2 edges") {
  const auto g = make_graph({{"a", 0}, {"b", 0}}, {{"e", "a", "b", 0}});
  const auto beta = barycentric_subdivide(g);
  CHECK(beta.graph.vertex_count() == 3);
  CHECK(beta.graph.edge_count() == 2);
  CHECK(beta.graph.has_vertex("e~b"));
  CHECK(beta.vertex_origin.at("e~b") == at_barycenter("e"));
}

TEST_CASE("subdivision of the 8-graph gives 13 vertices and 14 edges") {
  const auto beta = barycentric_subdivide(make_eight_graph());
  CHECK(beta.graph.vertex_count() == 13);
  CHECK(beta.graph.edge_count() == 14);
}

TEST_CASE("subdivision of a single vertex is itself") {
  const auto g = make_graph({{"a", 3}}, {});
  const auto beta = barycentric_subdivide(g);
  CHECK(beta.graph.vertex_count() == 1);
  CHECK(beta.graph.edge_count() == 0);
}

TEST_CASE("subdivision counts hold for random graphs, twice over") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto g = random_graph(rng);
    const auto b1 = barycentric_subdivide(g);
    CHECK(b1.graph.vertex_count() == g.vertex_count() + g.edge_count());
    CHECK(b1.graph.edge_count() == 2 * g.edge_count());
    const auto b2 = barycentric_subdivide(b1.graph);
    CHECK(b2.graph.vertex_count() == g.vertex_count() + 3 * g.edge_count());
    CHECK(b2.graph.edge_count() == 4 * g.edge_count());
    // Colors are inherited from the subdivided edge.
    for (const auto& e : g.edges()) {
      CHECK(b1.graph.find_vertex(e.id + "~b")->color == e.color);
      CHECK(b1.graph.find_edge(e.id + "~0")->color == e.color);
    }
  }
}

TEST_CASE("subdivision point round-trips through its text form") {
  CHECK(subdivision_point_from_string("v:abc") == at_vertex("abc"));
  CHECK(subdivision_point_from_string("bary:e1") == at_barycenter("e1"));
  CHECK(!subdivision_point_from_string("x:abc").has_value());
  CHECK(!subdivision_point_from_string("v:").has_value());
  CHECK(subdivision_point_to_string(at_barycenter("e")) == "bary:e");
}
