#pragma once

// Test-only fixtures and oracles. Nothing here calls into the code paths
// it is used to check.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "msindex/enumerate.hpp"
#include "msindex/tree.hpp"

namespace msindex::testing {

// x0=0 adjacent to a=1, b=2, d=3; edge d-e with e=4.
inline Tree chair() { return Tree::from_edges(5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {3, 4}}); }

// Center 0 with arms of length two: 0-1-2, 0-3-4, 0-5-6.
inline Tree spider222() {
  return Tree::from_edges(7, std::vector<Edge>{{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

// Two stars joined through a shared vertex: centers 0 and 1, shared 2.
inline Tree two_star(int deg_a, int deg_b) {
  std::vector<Edge> edges{{0, 2}, {1, 2}};
  int next = 3;
  for (int i = 1; i < deg_a; ++i) edges.emplace_back(0, next++);
  for (int i = 1; i < deg_b; ++i) edges.emplace_back(1, next++);
  return Tree::from_edges(next, edges);
}

inline Tree random_tree(int n, std::mt19937_64& rng) {
  if (n <= 2) return n == 1 ? Tree() : path_tree(2);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (int& s : seq) s = pick(rng);
  return prufer_decode(n, seq);
}

inline Tree relabel(const Tree& t, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : t.edges()) edges.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
  return Tree::from_edges(t.order(), edges);
}

inline Tree random_relabel(const Tree& t, std::mt19937_64& rng) {
  std::vector<int> perm(t.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(t, perm);
}

// Isomorphism by trying every vertex permutation.
inline bool isomorphic_bruteforce(const Tree& a, const Tree& b) {
  if (a.order() != b.order()) return false;
  const int n = a.order();
  std::vector<int> da, db;
  for (int v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto edges = a.edges();
  do {
    bool ok = true;
    for (auto [u, v] : edges)
      if (!b.adjacent(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Fibonacci with Fib(1) = Fib(2) = 1.
inline unsigned long long fib(int k) {
  unsigned long long a = 0, b = 1;
  for (int i = 0; i < k; ++i) {
    unsigned long long c = a + b;
    a = b;
    b = c;
  }
  return a;
}

inline std::vector<Tree> all_free_trees(int n) {
  std::vector<Tree> out;
  FreeTreeStream s(n);
  while (auto t = s.next()) out.push_back(std::move(*t));
  return out;
}

// Maximum stable set size by subset scan.
inline int alpha_bruteforce(const Forest& f) {
  const int n = f.order();
  int best = 0;
  for (unsigned s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (auto [u, v] : f.edges())
      if ((s >> u & 1) && (s >> v & 1)) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

}  // namespace msindex::testing
