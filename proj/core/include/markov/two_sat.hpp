#pragma once

#include <optional>
#include <vector>

namespace markov {

/// Implication-graph 2-SAT over variables 0..n-1. Literal encoding: variable
/// v true = 2v, false = 2v+1. Deterministic: identical clause sequences give
/// identical assignments.
class TwoSat {
 public:
  explicit TwoSat(std::size_t variables);

  void add_clause(int a, bool a_value, int b, bool b_value);  // (a=a_value) or (b=b_value)
  void add_equal(int a, int b);
  void add_not_equal(int a, int b);

  /// Satisfying assignment, or nullopt. May be called repeatedly.
  std::optional<std::vector<bool>> solve() const;

  /// Variables on a contradiction cycle (x and !x in one strongly connected
  /// component); empty when satisfiable.
  std::vector<int> contradiction_witness() const;

 private:
  std::size_t n_;
  std::vector<std::vector<int>> implications_;

  std::vector<int> scc_components() const;
};

}  // namespace markov
