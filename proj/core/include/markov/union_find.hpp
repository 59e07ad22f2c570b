#pragma once

#include <utility>
#include <vector>

namespace markov {

struct UnionFind {
  std::vector<int> parent;  // negative = root holding -size

  explicit UnionFind(std::size_t n) : parent(n, -1) {}

  int root(int x) {
    while (parent[x] >= 0) {
      if (parent[parent[x]] >= 0) parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = root(a);
    b = root(b);
    if (a == b) return false;
    if (parent[a] > parent[b]) std::swap(a, b);
    parent[a] += parent[b];
    parent[b] = a;
    return true;
  }

  bool same(int a, int b) { return root(a) == root(b); }
};

}  // namespace markov
