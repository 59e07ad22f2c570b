#include <doctest.h>

#include "markov/builtins.hpp"
#include "markov/limit_metrics.hpp"
#include "test_support.hpp"

using namespace markov;
using namespace markov::testing;

namespace {

Expansion expand_builtin(const std::string& name, int depth) {
  auto result = expand(builtin_diagram(name).value(), depth);
  REQUIRE(result.ok());
  return std::move(result.levels);
}

}  // namespace

TEST_CASE("schedule arithmetic is exact") {
  const auto halving = MetricSchedule::halving(Rational(1));
  CHECK(halving.kappa_at(1) == Rational(1));
  CHECK(halving.kappa_at(4) == Rational(1, 8));
  CHECK(halving.kappa_tail(3) == Rational(1, 4));  // geometric: equals kappa_3
  for (int i = 1; i < 10; ++i) {
    CHECK(*halving.kappa_tail(i + 1) == *halving.kappa_tail(i) / 2);
  }

  const auto constant = MetricSchedule::constant(Rational(2, 3));
  CHECK(constant.kappa_at(7) == Rational(2, 3));
  CHECK(!constant.kappa_tail(1).has_value());

  const auto custom = MetricSchedule::custom_list({Rational(1), Rational(1, 3)});
  CHECK(custom.kappa_at(1) == Rational(1));
  CHECK(custom.kappa_at(2) == Rational(1, 3));
  CHECK(custom.kappa_at(9) == Rational(1, 3));
  CHECK(!custom.kappa_tail(1).has_value());
}

TEST_CASE("mesh bound of one_eight is 3 * 2^(1-i)") {
  const auto levels = expand_builtin("one_eight", 5);
  const auto schedule = MetricSchedule::halving(Rational(1));
  for (int i = 1; i <= 4; ++i) {
    Rational expected = Rational(3);
    for (int j = 1; j < i; ++j) expected /= 2;
    CHECK(mesh_bound(levels, schedule, i) == expected);
  }
  const auto d = builtin_diagram("one_eight").value();
  CHECK(max_top_diameter(d) == 3);
  CHECK(mesh_tail(d, schedule, 1) == Rational(3));
  CHECK(mesh_tail(d, schedule, 2) == Rational(3, 2));
  CHECK(!mesh_tail(d, MetricSchedule::constant(Rational(1)), 1).has_value());
}

TEST_CASE("component counts per level: doubling for cantor, constant 1 elsewhere") {
  CHECK(component_counts(expand_builtin("cantor", 6)) ==
        std::vector<std::size_t>{1, 2, 4, 8, 16, 32});
  for (const auto* name : {"one_eight", "diamond", "solenoid"}) {
    for (std::size_t count : component_counts(expand_builtin(name, 6))) {
      CHECK(count == 1);
    }
  }
}

TEST_CASE("lipschitz condition across builtins and schedules") {
  const auto halving = MetricSchedule::halving(Rational(1));
  SUBCASE("one_eight and diamond pass exhaustively") {
    for (const auto& name : {"one_eight", "diamond"}) {
      const auto levels = expand_builtin(name, 5);
      const auto report = check_lipschitz(levels, halving);
      CHECK(report.pass);
      CHECK(report.pairs_checked > 0);
    }
  }
  SUBCASE("solenoid with halving violates, with a reported pair") {
    const auto levels = expand_builtin("solenoid", 4);
    const auto report = check_lipschitz(levels, halving);
    CHECK(!report.pass);
    REQUIRE(!report.violations.empty());
    const auto& v = report.violations.front();
    CHECK(v.image_distance > v.distance);
  }
  SUBCASE("solenoid with a constant schedule passes") {
    const auto levels = expand_builtin("solenoid", 4);
    const auto report = check_lipschitz(levels, MetricSchedule::constant(Rational(1)));
    CHECK(report.pass);
  }
}

TEST_CASE("thread enumeration") {
  SUBCASE("cantor has 2^(d-1) threads at depth d") {
    const auto levels = expand_builtin("cantor", 5);
    for (int depth = 1; depth <= 5; ++depth) {
      const auto threads = enumerate_threads(levels, depth, 1000);
      CHECK(!threads.truncated);
      CHECK(threads.threads.size() == static_cast<std::size_t>(1) << (depth - 1));
      for (const auto& t : threads.threads) {
        CHECK(verify_thread(levels, t).empty());
      }
    }
  }
  SUBCASE("depth 1 gives one thread per start vertex") {
    const auto levels = expand_builtin("solenoid", 2);
    const auto threads = enumerate_threads(levels, 1, 10);
    CHECK(threads.threads.size() == 3);
  }
  SUBCASE("one_eight at depth 3 truncates at the limit") {
    const auto levels = expand_builtin("one_eight", 3);
    const auto threads = enumerate_threads(levels, 3, 10);
    CHECK(threads.truncated);
    CHECK(threads.threads.size() == 10);
    const auto all = enumerate_threads(levels, 3, 100);
    CHECK(!all.truncated);
    CHECK(all.threads.size() == 26);
    for (const auto& t : all.threads) CHECK(verify_thread(levels, t).empty());
  }
  SUBCASE("corrupting one address is detected") {
    const auto levels = expand_builtin("one_eight", 3);
    auto threads = enumerate_threads(levels, 3, 100);
    Thread t = threads.threads.front();
    // Move the level-1 entry to the other start vertex.
    t.cells[0].cell = t.cells[0].cell == "v1" ? "v2" : "v1";
    t.cells[0].is_edge = false;
    CHECK(!verify_thread(levels, t).empty());
  }
}

TEST_CASE("distance bounds between threads") {
  const auto d = builtin_diagram("one_eight").value();
  const auto levels = expand_builtin("one_eight", 4);
  const auto schedule = MetricSchedule::halving(Rational(1));
  const auto threads = enumerate_threads(levels, 4, 1000);
  REQUIRE(threads.threads.size() >= 2);

  SUBCASE("a thread against itself stays within the tail") {
    const auto& t = threads.threads.front();
    const auto result = distance_bounds(levels, d, t, t, 2, schedule);
    REQUIRE(result.bound.has_value());
    CHECK(result.bound->lower == Rational(0));
    CHECK(result.bound->upper == Rational(2) * *mesh_tail(d, schedule, 2));
  }
  SUBCASE("distinct threads over the single level-1 edge") {
    const auto& a = threads.threads.front();
    const auto& b = threads.threads.back();
    const auto result = distance_bounds(levels, d, a, b, 1, schedule);
    REQUIRE(result.bound.has_value());
    CHECK(*result.bound->upper <= Rational(1) + Rational(2) * *mesh_tail(d, schedule, 1));
  }
  SUBCASE("bounds from different levels are consistent") {
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = i + 1; j < 8; ++j) {
        const auto& a = threads.threads[i * 3];
        const auto& b = threads.threads[j * 3];
        Rational max_lower(0);
        std::optional<Rational> min_upper;
        for (int level = 1; level <= 4; ++level) {
          const auto result = distance_bounds(levels, d, a, b, level, schedule);
          REQUIRE(result.bound.has_value());
          REQUIRE(!result.bound->separated);
          max_lower = std::max(max_lower, result.bound->lower);
          if (!min_upper || *result.bound->upper < *min_upper) min_upper = result.bound->upper;
        }
        REQUIRE(min_upper.has_value());
        CHECK(max_lower <= *min_upper);
      }
    }
  }
  SUBCASE("divergent schedules refuse to produce bounds") {
    const auto result = distance_bounds(levels, d, threads.threads[0], threads.threads[1], 2,
                                        MetricSchedule::constant(Rational(1)));
    CHECK(result.divergent_tail);
    CHECK(!result.bound.has_value());
  }
}

TEST_CASE("separated cantor threads get a positive floor") {
  const auto d = builtin_diagram("cantor").value();
  const auto levels = expand_builtin("cantor", 5);
  const auto schedule = MetricSchedule::halving(Rational(1));
  const auto threads = enumerate_threads(levels, 5, 100);
  // First and last threads diverge at level 2 already.
  const auto& a = threads.threads.front();
  const auto& b = threads.threads.back();
  REQUIRE(a.cells[1].cell != b.cells[1].cell);
  for (int level = 2; level <= 5; ++level) {
    const auto result = distance_bounds(levels, d, a, b, level, schedule);
    REQUIRE(result.bound.has_value());
    CHECK(result.bound->separated);
    CHECK(result.bound->lower > 0);
    CHECK(!result.bound->upper.has_value());
  }
}
