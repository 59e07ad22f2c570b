#include "markov/builtins.hpp"

namespace markov {

namespace {

// Single vertex in the limit of every vertex-production fiber chain: the
// 2^(n-1)-point levels of the Cantor diagram come from one doubling rule.
MarkovDiagram make_cantor() {
  MarkovDiagram d;
  d.name = "cantor";
  d.palette = {{0, "black"}};
  d.start = ColoredGraph({{"s0", 0}}, {});
  d.productions.push_back({"double",
                           ColoredGraph({{"a", 0}, {"b", 0}}, {}),
                           ColoredGraph({{"w", 0}}, {}),
                           {{"a", at_vertex("w")}, {"b", at_vertex("w")}}});
  d.notes = "Each level doubles every point; the limit is the Cantor set.";
  d.normalize();
  return d;
}

MarkovDiagram make_one_eight() {
  MarkovDiagram d;
  d.name = "one_eight";
  d.palette = {{0, "black"}};
  d.start = ColoredGraph({{"v1", 0}, {"v2", 0}}, {{"e", {"v1", "v2"}, 0}});

  // P_1: single edge projected onto a vertex.
  d.productions.push_back({"P_1",
                           ColoredGraph({{"p", 0}, {"q", 0}}, {{"pq", {"p", "q"}, 0}}),
                           ColoredGraph({{"w", 0}}, {}),
                           {{"p", at_vertex("w")}, {"q", at_vertex("w")}}});

  // P_8: hexagon A-B-C-D-E-F plus chord C-F, projected onto a single edge.
  // D,E sit over the tail, A,B over the head, C,F over the barycenter; the
  // fiber edges are DE (tail) and AB (head).
  d.productions.push_back(
      {"P_8",
       ColoredGraph({{"A", 0}, {"B", 0}, {"C", 0}, {"D", 0}, {"E", 0}, {"F", 0}},
                    {{"eAB", {"A", "B"}, 0},
                     {"eBC", {"B", "C"}, 0},
                     {"eCD", {"C", "D"}, 0},
                     {"eDE", {"D", "E"}, 0},
                     {"eEF", {"E", "F"}, 0},
                     {"eFA", {"F", "A"}, 0},
                     {"eCF", {"C", "F"}, 0}}),
       ColoredGraph({{"bt", 0}, {"bh", 0}}, {{"be", {"bt", "bh"}, 0}}),
       {{"A", at_vertex("bh")},
        {"B", at_vertex("bh")},
        {"C", at_barycenter("be")},
        {"D", at_vertex("bt")},
        {"E", at_vertex("bt")},
        {"F", at_barycenter("be")}}});

  // The letter correspondence is chosen so that the straight section pairing
  // (p over tail to p over head) would need disjoint D->A and E->B paths,
  // which the 8-graph does not admit; only the crossed pairing is feasible.
  d.gluings.push_back({"G_l", "P_1", "P_8", {{"p", "D"}, {"q", "E"}}, {{"w", "bt"}}});
  d.gluings.push_back({"G_r", "P_1", "P_8", {{"p", "A"}, {"q", "B"}}, {{"w", "bh"}}});
  d.notes = "Named after the 8-shaped edge production; the limit is the Menger curve.";
  d.normalize();
  return d;
}

MarkovDiagram make_diamond() {
  MarkovDiagram d;
  d.name = "diamond";
  d.palette = {{0, "black"}};
  d.start = ColoredGraph({{"v1", 0}, {"v2", 0}}, {{"e", {"v1", "v2"}, 0}});

  // Trivial vertex production.
  d.productions.push_back({"V",
                           ColoredGraph({{"t0", 0}}, {}),
                           ColoredGraph({{"w", 0}}, {}),
                           {{"t0", at_vertex("w")}}});

  // Edge production: a 4-cycle over the edge; tt and ht are the one-point
  // fibers over the endpoints, m1/m2 sit over the barycenter.
  d.productions.push_back({"D",
                           ColoredGraph({{"ht", 0}, {"m1", 0}, {"m2", 0}, {"tt", 0}},
                                        {{"e1", {"tt", "m1"}, 0},
                                         {"e2", {"tt", "m2"}, 0},
                                         {"e3", {"m1", "ht"}, 0},
                                         {"e4", {"m2", "ht"}, 0}}),
                           ColoredGraph({{"bt", 0}, {"bh", 0}}, {{"be", {"bt", "bh"}, 0}}),
                           {{"tt", at_vertex("bt")},
                            {"ht", at_vertex("bh")},
                            {"m1", at_barycenter("be")},
                            {"m2", at_barycenter("be")}}});

  d.gluings.push_back({"G_t", "V", "D", {{"t0", "tt"}}, {{"w", "bt"}}});
  d.gluings.push_back({"G_h", "V", "D", {{"t0", "ht"}}, {{"w", "bh"}}});
  d.notes = "Every edge inflates into a diamond; the limit is the diamond curve.";
  d.normalize();
  return d;
}

MarkovDiagram make_join() {
  MarkovDiagram d;
  d.name = "join";
  d.palette = {{0, "black"}};
  d.start = ColoredGraph({{"v1", 0}, {"v2", 0}}, {{"e", {"v1", "v2"}, 0}});

  // Doubling vertex production (two isolated points over a vertex).
  d.productions.push_back({"W",
                           ColoredGraph({{"a", 0}, {"b", 0}}, {}),
                           ColoredGraph({{"w", 0}}, {}),
                           {{"a", at_vertex("w")}, {"b", at_vertex("w")}}});

  // Edge production: K_{2,2} between the two doubled fibers; every top edge
  // maps onto the full bottom edge.
  d.productions.push_back({"J",
                           ColoredGraph({{"h1", 0}, {"h2", 0}, {"t1", 0}, {"t2", 0}},
                                        {{"e1", {"t1", "h1"}, 0},
                                         {"e2", {"t2", "h2"}, 0},
                                         {"e3", {"t1", "h2"}, 0},
                                         {"e4", {"t2", "h1"}, 0}}),
                           ColoredGraph({{"bt", 0}, {"bh", 0}}, {{"be", {"bt", "bh"}, 0}}),
                           {{"t1", at_vertex("bt")},
                            {"t2", at_vertex("bt")},
                            {"h1", at_vertex("bh")},
                            {"h2", at_vertex("bh")}}});

  d.gluings.push_back({"G_t", "W", "J", {{"a", "t1"}, {"b", "t2"}}, {{"w", "bt"}}});
  d.gluings.push_back({"G_h", "W", "J", {{"a", "h1"}, {"b", "h2"}}, {{"w", "bh"}}});
  d.notes = "The limit is the join of two Cantor sets.";
  d.normalize();
  return d;
}

MarkovDiagram make_suspension() {
  MarkovDiagram d;
  d.name = "suspension";
  // Color 0 marks the suspension end points, color 1 the interior level.
  d.palette = {{0, "end"}, {1, "mid"}};
  d.start = ColoredGraph({{"m", 1}, {"n", 0}, {"s", 0}},
                         {{"e1", {"n", "m"}, 0}, {"e2", {"s", "m"}, 0}});

  // Trivial production for the end points.
  d.productions.push_back({"F",
                           ColoredGraph({{"f0", 0}}, {}),
                           ColoredGraph({{"w", 0}}, {}),
                           {{"f0", at_vertex("w")}}});

  // Doubling production for interior vertices. The drawn diagram leaves the
  // interior vertex without a production because its gluings act only on the
  // end points; an explicit doubling rule is required here so that every
  // vertex signature is covered and expansion is total.
  d.productions.push_back({"H",
                           ColoredGraph({{"h0", 1}, {"h1", 1}}, {}),
                           ColoredGraph({{"w", 1}}, {}),
                           {{"h0", at_vertex("w")}, {"h1", at_vertex("w")}}});

  // Edge production: the two-edge path t0 - tf - t1 over the (end, mid)
  // edge; both top edges map onto the full bottom edge.
  d.productions.push_back({"P",
                           ColoredGraph({{"t0", 1}, {"t1", 1}, {"tf", 0}},
                                        {{"e1", {"tf", "t0"}, 0}, {"e2", {"tf", "t1"}, 0}}),
                           ColoredGraph({{"bf", 0}, {"bm", 1}}, {{"be", {"bf", "bm"}, 0}}),
                           {{"tf", at_vertex("bf")},
                            {"t0", at_vertex("bm")},
                            {"t1", at_vertex("bm")}}});

  d.gluings.push_back({"G_f", "F", "P", {{"f0", "tf"}}, {{"w", "bf"}}});
  d.gluings.push_back({"G_h", "H", "P", {{"h0", "t0"}, {"h1", "t1"}}, {{"w", "bm"}}});
  d.notes =
      "Suspension of the Cantor set. Includes an explicit interior doubling production "
      "(omitted in the usual picture) so the diagram is elementary and expandable.";
  d.normalize();
  return d;
}

MarkovDiagram make_solenoid() {
  MarkovDiagram d;
  d.name = "solenoid";
  d.palette = {{0, "solid"}, {1, "dotted"}};
  d.start = ColoredGraph({{"a0", 0}, {"a1", 0}, {"a2", 0}},
                         {{"s01", {"a0", "a1"}, 0}, {"s02", {"a0", "a2"}, 0},
                          {"d12", {"a1", "a2"}, 1}});

  d.productions.push_back({"V2",
                           ColoredGraph({{"u0", 0}, {"u1", 0}}, {}),
                           ColoredGraph({{"w", 0}}, {}),
                           {{"u0", at_vertex("w")}, {"u1", at_vertex("w")}}});

  // Solid edge doubles into two parallel solid strands.
  d.productions.push_back({"S",
                           ColoredGraph({{"p0", 0}, {"p1", 0}, {"q0", 0}, {"q1", 0}},
                                        {{"e1", {"p0", "p1"}, 0}, {"e2", {"q0", "q1"}, 0}}),
                           ColoredGraph({{"bt", 0}, {"bh", 0}}, {{"be", {"bt", "bh"}, 0}}),
                           {{"p0", at_vertex("bt")},
                            {"p1", at_vertex("bh")},
                            {"q0", at_vertex("bt")},
                            {"q1", at_vertex("bh")}}});

  // Dotted edge doubles with a twist: the strands swap sides, one of them
  // staying dotted. This keeps exactly one dotted edge per level and makes
  // every level a single cycle.
  d.productions.push_back({"D",
                           ColoredGraph({{"h1", 0}, {"h2", 0}, {"t1", 0}, {"t2", 0}},
                                        {{"ed", {"t1", "h2"}, 1}, {"es", {"t2", "h1"}, 0}}),
                           ColoredGraph({{"bt", 0}, {"bh", 0}}, {{"be", {"bt", "bh"}, 1}}),
                           {{"t1", at_vertex("bt")},
                            {"t2", at_vertex("bt")},
                            {"h1", at_vertex("bh")},
                            {"h2", at_vertex("bh")}}});

  d.gluings.push_back({"S_t", "V2", "S", {{"u0", "p0"}, {"u1", "q0"}}, {{"w", "bt"}}});
  d.gluings.push_back({"S_h", "V2", "S", {{"u0", "p1"}, {"u1", "q1"}}, {{"w", "bh"}}});
  d.gluings.push_back({"D_t", "V2", "D", {{"u0", "t1"}, {"u1", "t2"}}, {{"w", "bt"}}});
  d.gluings.push_back({"D_h", "V2", "D", {{"u0", "h1"}, {"u1", "h2"}}, {{"w", "bh"}}});
  d.notes =
      "Degree-2 covers of a circle; the endpoint doubling production and its gluings are "
      "written out explicitly. The limit is the dyadic solenoid.";
  d.normalize();
  return d;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"cantor", "diamond", "join", "one_eight", "solenoid", "suspension"};
}

std::optional<MarkovDiagram> builtin_diagram(const std::string& name) {
  if (name == "cantor") return make_cantor();
  if (name == "one_eight") return make_one_eight();
  if (name == "diamond") return make_diamond();
  if (name == "join") return make_join();
  if (name == "suspension") return make_suspension();
  if (name == "solenoid") return make_solenoid();
  return std::nullopt;
}

}  // namespace markov
