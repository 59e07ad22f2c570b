#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "markov/builtins.hpp"
#include "markov/dsl.hpp"

using namespace markov;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("markov_cli_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("validate builtin exits 0 with a report") {
  const auto run = run_cli({"validate", "--builtin", "one_eight"});
  CHECK(run.exit_code == 0);
  CHECK(run.out.find("coverage complete") != std::string::npos);
}

TEST_CASE("validate of a malformed file exits 1 with a located error") {
  const auto dir = temp_dir("bad");
  const fs::path path = dir / "broken.mdgm";
  std::ofstream(path) << "{ name: \"x\" ?";
  const auto run = run_cli({"validate", path.string()});
  CHECK(run.exit_code == 1);
  CHECK(run.err.find("SyntaxError") != std::string::npos);
}

TEST_CASE("validate of a diagram file written by serialize exits 0") {
  const auto dir = temp_dir("roundtrip");
  const fs::path path = dir / "one_eight.mdgm";
  std::ofstream(path) << serialize_diagram(builtin_diagram("one_eight").value());
  const auto run = run_cli({"validate", path.string()});
  CHECK(run.exit_code == 0);
}

TEST_CASE("expand writes per-level artifacts") {
  const auto dir = temp_dir("expand");
  const auto run =
      run_cli({"expand", "--builtin", "cantor", "--depth", "6", "--out", dir.string()});
  CHECK(run.exit_code == 0);
  for (int i = 1; i <= 6; ++i) {
    CHECK(fs::exists(dir / ("cantor_level_" + std::to_string(i) + ".dot")));
  }
  CHECK(fs::exists(dir / "cantor_bonding_2.txt"));
  CHECK(fs::exists(dir / "cantor_verification.txt"));
  const std::string summary = slurp(dir / "cantor_verification.txt");
  CHECK(summary.find("level 6: 32 vertices, 0 edges, decomposition verified") !=
        std::string::npos);
}

TEST_CASE("expand with depth 0 is a usage error") {
  const auto run = run_cli({"expand", "--builtin", "cantor", "--depth", "0"});
  CHECK(run.exit_code == 1);
  CHECK(!run.err.empty());
}

TEST_CASE("a diagram missing a gluing role exits 1 with MissingGluing printed") {
  auto d = builtin_diagram("one_eight").value();
  d.gluings.pop_back();  // drop G_r
  const auto dir = temp_dir("missing_gluing");
  const fs::path path = dir / "incomplete.mdgm";
  std::ofstream(path) << serialize_diagram(d);
  const auto run = run_cli({"validate", path.string()});
  CHECK(run.exit_code == 1);
  CHECK(run.out.find("MissingGluing(P_1->P_8@head)") != std::string::npos);
}

TEST_CASE("an expansion collision exits 3") {
  // Parallel color-2 fiber edges collide under identification; see the
  // engine unit test of the same shape.
  MarkovDiagram d;
  d.name = "collision";
  d.palette = {{0, "a"}, {1, "b"}, {2, "c"}};
  d.start = ColoredGraph({{"u", 0}, {"w1", 1}, {"w2", 1}},
                         {{"e1", {"u", "w1"}, 0}, {"e2", {"u", "w2"}, 0}});
  d.productions.push_back({"VP0", ColoredGraph({{"x", 0}, {"y", 0}}, {}),
                           ColoredGraph({{"w", 0}}, {}),
                           {{"x", at_vertex("w")}, {"y", at_vertex("w")}}});
  d.productions.push_back({"VP1", ColoredGraph({{"z", 1}}, {}), ColoredGraph({{"w", 1}}, {}),
                           {{"z", at_vertex("w")}}});
  d.productions.push_back(
      {"EP",
       ColoredGraph({{"a", 0}, {"b", 0}, {"c", 1}}, {{"t1", {"a", "b"}, 2}, {"t2", {"b", "c"}, 0}}),
       ColoredGraph({{"bt", 0}, {"bh", 1}}, {{"be", {"bt", "bh"}, 0}}),
       {{"a", at_vertex("bt")}, {"b", at_vertex("bt")}, {"c", at_vertex("bh")}}});
  d.productions.push_back(
      {"EP2",
       ColoredGraph({{"p0", 0}, {"p1", 0}, {"q0", 0}, {"q1", 0}},
                    {{"f1", {"p0", "q0"}, 2}, {"f2", {"p1", "q1"}, 2}}),
       ColoredGraph({{"b0", 0}, {"b1", 0}}, {{"be", {"b0", "b1"}, 2}}),
       {{"p0", at_vertex("b0")},
        {"p1", at_vertex("b0")},
        {"q0", at_vertex("b1")},
        {"q1", at_vertex("b1")}}});
  d.gluings.push_back({"Gt", "VP0", "EP", {{"x", "a"}, {"y", "b"}}, {{"w", "bt"}}});
  d.gluings.push_back({"Gh", "VP1", "EP", {{"z", "c"}}, {{"w", "bh"}}});
  d.gluings.push_back({"G2t", "VP0", "EP2", {{"x", "p0"}, {"y", "p1"}}, {{"w", "b0"}}});
  d.gluings.push_back({"G2h", "VP0", "EP2", {{"x", "q0"}, {"y", "q1"}}, {{"w", "b1"}}});
  d.normalize();

  const auto dir = temp_dir("collision");
  const fs::path path = dir / "collision.mdgm";
  std::ofstream(path) << serialize_diagram(d);
  const auto run = run_cli({"expand", path.string(), "--depth", "2", "--out",
                            (dir / "out").string()});
  CHECK(run.exit_code == 3);
  CHECK(run.err.find("UnintendedCollision") != std::string::npos);
}

TEST_CASE("check writes a certificate and honors --require") {
  const auto dir = temp_dir("check");
  const auto ok = run_cli({"check", "--builtin", "one_eight", "--depth", "4", "--out",
                           dir.string()});
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("label: menger-curve") != std::string::npos);
  const std::string cert = slurp(dir / "one_eight.mcert");
  CHECK(cert.find("label: \"menger-curve\"") != std::string::npos);
  CHECK(cert.find("stamped_at") == std::string::npos);

  const auto required = run_cli({"check", "--builtin", "suspension", "--depth", "3", "--out",
                                 dir.string(), "--require", "locally-connected"});
  CHECK(required.exit_code == 2);

  const auto inconclusive =
      run_cli({"check", "--builtin", "suspension", "--depth", "3", "--out", dir.string()});
  CHECK(inconclusive.exit_code == 0);  // inconclusive is not an error
}

TEST_CASE("sections command emits a verified witness or exits 2") {
  const auto dir = temp_dir("sections");
  const auto ok = run_cli({"sections", "--builtin", "one_eight", "--level", "2", "--out",
                           dir.string()});
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("verification: pass") != std::string::npos);
  CHECK(ok.out.find("straight infeasible") != std::string::npos);
  CHECK(fs::exists(dir / "one_eight_sections_2.txt"));

  const auto rejected = run_cli({"sections", "--builtin", "diamond", "--level", "1"});
  CHECK(rejected.exit_code == 2);
}

TEST_CASE("identical invocations produce byte-identical artifacts") {
  const auto dir1 = temp_dir("det1");
  const auto dir2 = temp_dir("det2");
  for (const auto* dir : {&dir1, &dir2}) {
    const auto expand_run = run_cli({"expand", "--builtin", "solenoid", "--depth", "5", "--out",
                                     dir->string(), "--format", "json"});
    REQUIRE(expand_run.exit_code == 0);
    const auto check_run =
        run_cli({"check", "--builtin", "solenoid", "--depth", "5", "--out", dir->string()});
    REQUIRE(check_run.exit_code == 0);
  }
  for (const auto& entry : fs::directory_iterator(dir1)) {
    const fs::path other = dir2 / entry.path().filename();
    REQUIRE(fs::exists(other));
    CHECK(slurp(entry.path()) == slurp(other));
  }
}
