#include "markov/two_sat.hpp"

#include <algorithm>

namespace markov {

namespace {

int lit(int var, bool value) { return 2 * var + (value ? 0 : 1); }
int negate(int l) { return l ^ 1; }

}  // namespace

TwoSat::TwoSat(std::size_t variables) : n_(variables), implications_(2 * variables) {}

void TwoSat::add_clause(int a, bool a_value, int b, bool b_value) {
  // (a || b) becomes !a -> b and !b -> a.
  const int la = lit(a, a_value);
  const int lb = lit(b, b_value);
  implications_[negate(la)].push_back(lb);
  implications_[negate(lb)].push_back(la);
}

void TwoSat::add_equal(int a, int b) {
  add_clause(a, false, b, true);
  add_clause(a, true, b, false);
}

void TwoSat::add_not_equal(int a, int b) {
  add_clause(a, true, b, true);
  add_clause(a, false, b, false);
}

// Iterative Tarjan; components come out numbered in reverse topological
// order, which is exactly what the standard assignment rule needs.
std::vector<int> TwoSat::scc_components() const {
  const int n = static_cast<int>(2 * n_);
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0, next_comp = 0;

  struct Frame {
    int node;
    std::size_t edge;
  };
  for (int start = 0; start < n; ++start) {
    if (index[start] != -1) continue;
    std::vector<Frame> frames{{start, 0}};
    index[start] = low[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = true;

    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < implications_[f.node].size()) {
        const int to = implications_[f.node][f.edge++];
        if (index[to] == -1) {
          index[to] = low[to] = next_index++;
          stack.push_back(to);
          on_stack[to] = true;
          frames.push_back({to, 0});
        } else if (on_stack[to]) {
          low[f.node] = std::min(low[f.node], index[to]);
        }
      } else {
        if (low[f.node] == index[f.node]) {
          while (true) {
            const int v = stack.back();
            stack.pop_back();
            on_stack[v] = false;
            comp[v] = next_comp;
            if (v == f.node) break;
          }
          ++next_comp;
        }
        const int done = f.node;
        frames.pop_back();
        if (!frames.empty()) {
          low[frames.back().node] = std::min(low[frames.back().node], low[done]);
        }
      }
    }
  }
  return comp;
}

std::optional<std::vector<bool>> TwoSat::solve() const {
  const std::vector<int> comp = scc_components();
  std::vector<bool> assignment(n_);
  for (std::size_t v = 0; v < n_; ++v) {
    if (comp[2 * v] == comp[2 * v + 1]) return std::nullopt;
    assignment[v] = comp[2 * v] < comp[2 * v + 1];
  }
  return assignment;
}

std::vector<int> TwoSat::contradiction_witness() const {
  const std::vector<int> comp = scc_components();
  std::vector<int> out;
  for (std::size_t v = 0; v < n_; ++v) {
    if (comp[2 * v] == comp[2 * v + 1]) out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace markov
