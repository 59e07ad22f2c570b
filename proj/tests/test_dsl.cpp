#include <doctest.h>

#include <random>

#include "markov/builtins.hpp"
#include "markov/diagram_validate.hpp"
#include "markov/dsl.hpp"
#include "test_support.hpp"

using namespace markov;
using namespace markov::testing;

TEST_CASE("builtins round-trip through the text form") {
  for (const auto& name : builtin_names()) {
    const auto d = builtin_diagram(name).value();
    const std::string text = serialize_diagram(d);
    const auto parsed = parse_diagram(text);
    REQUIRE_MESSAGE(parsed.ok(), name);
    CHECK(serialize_diagram(*parsed.diagram) == text);
    CHECK(diagrams_equal(d, *parsed.diagram));
    CHECK(validate_diagram(*parsed.diagram).valid());
  }
}

TEST_CASE("serialization is a canonical fixpoint and byte-stable") {
  const auto d = builtin_diagram("one_eight").value();
  const std::string once = serialize_diagram(d);
  CHECK(once == serialize_diagram(d));
  const auto reparsed = parse_diagram(once);
  REQUIRE(reparsed.ok());
  CHECK(serialize_diagram(*reparsed.diagram) == once);
  CHECK(content_hash(d) == content_hash(*reparsed.diagram));
}

TEST_CASE("parse rejects malformed documents with located errors") {
  SUBCASE("empty document is missing required fields") {
    const auto result = parse_diagram("{}");
    CHECK(!result.ok());
    CHECK(has_issue(result.issues, "SyntaxError"));
  }
  SUBCASE("lexical garbage reports line and column") {
    const auto result = parse_diagram("{\n  name: \"x\",\n  ?\n}");
    REQUIRE(!result.ok());
    REQUIRE(result.issues.size() == 1);
    CHECK(result.issues[0].code == "SyntaxError");
    CHECK(result.issues[0].subject == "3:3");
  }
  SUBCASE("unterminated string") {
    CHECK(has_issue(parse_diagram("{ name: \"oops }").issues, "SyntaxError"));
  }
  SUBCASE("unknown fields are rejected") {
    auto d = builtin_diagram("cantor").value();
    std::string text = serialize_diagram(d);
    text.insert(text.find("palette"), "sprocket: 3,\n  ");
    const auto result = parse_diagram(text);
    CHECK(!result.ok());
    CHECK(has_issue(result.issues, "UnknownField"));
  }
  SUBCASE("unknown production reference in a gluing") {
    auto d = builtin_diagram("one_eight").value();
    std::string text = serialize_diagram(d);
    auto at = text.find("dst: \"P_8\"");
    REQUIRE(at != std::string::npos);
    text.replace(at, 10, "dst: \"P_9\"");
    const auto result = parse_diagram(text);
    CHECK(!result.ok());
    CHECK(has_issue(result.issues, "UnknownReference", "P_9"));
  }
  SUBCASE("duplicate production names") {
    auto d = builtin_diagram("cantor").value();
    Production clone = d.productions[0];
    d.productions.push_back(clone);
    const auto result = parse_diagram(serialize_diagram(d));
    CHECK(!result.ok());
    CHECK(has_issue(result.issues, "DuplicateName", "double"));
  }
  SUBCASE("identifiers with reserved characters are rejected") {
    const auto result = parse_diagram(
        "{ name: \"x\", palette: { 0: \"b\" }, start: { vertices: [ { id: \"a~b\", color: 0 } ], "
        "edges: [] }, productions: [], gluings: [] }");
    CHECK(!result.ok());
  }
  SUBCASE("trailing content") {
    CHECK(!parse_diagram("{ name: \"x\" } extra").ok());
  }
}

TEST_CASE("comments are accepted and never re-emitted") {
  const std::string text =
      "# a fixture\n{ name: \"c\", palette: { 0: \"b\" },\n"
      "  # the start graph\n"
      "  start: { vertices: [ { id: \"s\", color: 0 } ], edges: [] },\n"
      "  productions: [], gluings: [] }";
  const auto result = parse_diagram(text);
  REQUIRE(result.ok());
  CHECK(serialize_diagram(*result.diagram).find('#') == std::string::npos);
}

TEST_CASE("fuzzed documents hit the parse-serialize fixpoint") {
  std::mt19937_64 rng(20240817);
  for (int i = 0; i < 40; ++i) {
    const auto d = random_document(rng);
    const std::string text = serialize_diagram(d);
    const auto parsed = parse_diagram(text);
    REQUIRE_MESSAGE(parsed.ok(), text);
    CHECK(serialize_diagram(*parsed.diagram) == text);
  }
}

TEST_CASE("the canonical form is pinned byte for byte") {
  MarkovDiagram d;
  d.name = "tiny";
  d.palette = {{0, "black"}};
  d.start = make_graph({{"u", 0}, {"v", 0}}, {{"e", "u", "v", 0}});
  d.productions.push_back({"P",
                           make_graph({{"t", 0}}, {}),
                           make_graph({{"w", 0}}, {}),
                           {{"t", at_vertex("w")}}});
  d.gluings.clear();
  const std::string expected =
      "{\n"
      "  name: \"tiny\",\n"
      "  palette: {\n"
      "    0: \"black\"\n"
      "  },\n"
      "  start: {\n"
      "    vertices: [\n"
      "      { id: \"u\", color: 0 },\n"
      "      { id: \"v\", color: 0 }\n"
      "    ],\n"
      "    edges: [\n"
      "      { id: \"e\", ends: [\"u\", \"v\"], color: 0 }\n"
      "    ]\n"
      "  },\n"
      "  productions: [\n"
      "    {\n"
      "      name: \"P\",\n"
      "      top: {\n"
      "        vertices: [\n"
      "          { id: \"t\", color: 0 }\n"
      "        ],\n"
      "        edges: []\n"
      "      },\n"
      "      bottom: {\n"
      "        vertices: [\n"
      "          { id: \"w\", color: 0 }\n"
      "        ],\n"
      "        edges: []\n"
      "      },\n"
      "      map: {\n"
      "        t: \"v:w\"\n"
      "      }\n"
      "    }\n"
      "  ],\n"
      "  gluings: []\n"
      "}\n";
  CHECK(serialize_diagram(d) == expected);
  CHECK(content_hash(d) == fnv1a64_hex(expected));
}

TEST_CASE("identifier rules") {
  CHECK(valid_identifier("P_8"));
  CHECK(valid_identifier("a.b-c"));
  CHECK(!valid_identifier("8P"));
  CHECK(!valid_identifier("a|b"));
  CHECK(!valid_identifier("a~b"));
  CHECK(!valid_identifier(""));
}
