#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "markov/expansion.hpp"
#include "markov/rational.hpp"

namespace markov {

/// Edge-length schedule kappa_1, kappa_2, ... across levels.
struct MetricSchedule {
  enum class Rule { Halving, Constant, Custom };
  Rule rule = Rule::Halving;
  Rational kappa1 = Rational(1);
  std::vector<Rational> custom;  // kappa_i = custom[i-1]; last value repeats

  static MetricSchedule halving(Rational kappa1 = Rational(1));
  static MetricSchedule constant(Rational kappa1 = Rational(1));
  static MetricSchedule custom_list(std::vector<Rational> values);

  Rational kappa_at(int level) const;
  /// Sum of kappa_j for j > level; finite only for halving schedules.
  std::optional<Rational> kappa_tail(int level) const;
};

/// Largest internal diameter of a production top, in edge counts. Bounds the
/// diameter of every chart image at every level.
int max_top_diameter(const MarkovDiagram& d);

/// Connected-component count per level. A finite-level proxy for
/// epsilon-connectivity of the limit, nothing more.
std::vector<std::size_t> component_counts(const Expansion& levels);

/// kappa_level * (largest geodesic diameter, in edge counts of K_{level+1},
/// over the top chart images of the decomposition at `level`). Requires
/// level+1 expanded.
Rational mesh_bound(const Expansion& levels, const MetricSchedule& schedule, int level);

/// Exact tail bound sum_{j>level} (max top diameter * kappa_j); nullopt when
/// the schedule's tail diverges.
std::optional<Rational> mesh_tail(const MarkovDiagram& d, const MetricSchedule& schedule,
                                  int level);

/// Exhaustive vertex-pair check of d(p(u), p(v)) <= d(u, v) for every
/// consecutive pair of levels; image distances live in the subdivided metric
/// of the lower level (half-edges of length kappa_i / 2).
struct LipschitzViolation {
  int level = 0;  // i of the bonding map K_{i+1} -> K_i
  std::string u, v;
  Rational image_distance;
  Rational distance;
};
struct LipschitzReport {
  bool pass = false;
  std::size_t pairs_checked = 0;
  std::vector<LipschitzViolation> violations;  // capped
  std::size_t violation_count = 0;             // uncapped
};
LipschitzReport check_lipschitz(const Expansion& levels, const MetricSchedule& schedule,
                                std::size_t max_reported = 16);

/// A point of the limit at finite resolution: one cell per level, each
/// projecting into (the subdivision of) its predecessor. Entries are the
/// minimal carrier cells, so vertex entries may sit over edge entries.
struct ThreadEntry {
  bool is_edge = false;
  std::string cell;

  bool operator==(const ThreadEntry&) const = default;
};
struct Thread {
  std::vector<ThreadEntry> cells;  // index 0 = level 1

  bool operator==(const Thread&) const = default;
};

struct ThreadEnumeration {
  std::vector<Thread> threads;
  bool truncated = false;  // limit exceeded
};

/// Threads ending at the vertices of K_depth, in address order, at most
/// `limit` of them.
ThreadEnumeration enumerate_threads(const Expansion& levels, int depth, std::size_t limit);

/// Compatibility of every step under the bonding maps; never assumed.
std::vector<Issue> verify_thread(const Expansion& levels, const Thread& t);

/// Bounds on the limit distance of two threads read off at one level:
///   lower = max(0, d_i - 2 tail(i)),  upper = d_i + 2 tail(i)
/// where d_i is the geodesic distance of the level-i carrier cells. When the
/// carriers sit in different components the distance has no finite value;
/// the bound degenerates to the separation floor kappa_i with no upper
/// bound, provided the separation persists at every deeper expanded level.
struct DistanceBound {
  Rational lower;
  std::optional<Rational> upper;
  int level = 0;
  Rational tail;
  bool separated = false;
};
struct DistanceBoundResult {
  bool divergent_tail = false;
  std::optional<DistanceBound> bound;
};
DistanceBoundResult distance_bounds(const Expansion& levels, const MarkovDiagram& d,
                                    const Thread& a, const Thread& b, int level,
                                    const MetricSchedule& schedule);

}  // namespace markov
