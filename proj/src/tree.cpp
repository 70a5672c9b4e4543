#include "msindex/tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "msindex/error.hpp"

namespace msindex {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

// Shared validation for Forest and Tree; Exception is the type thrown.
template <typename Exception>
std::vector<std::vector<Vertex>> build_acyclic(int n, std::span<const Edge> edges) {
  if (n < 0) throw Exception("negative vertex count");
  std::vector<std::vector<Vertex>> adj(n);
  DisjointSets sets(n);
  for (const auto& e : edges) {
    auto [u, v] = e;
    if (u < 0 || v < 0 || u >= n || v >= n) throw Exception("vertex id out of range in edge " + edge_str(e));
    if (u == v) throw Exception("self-loop " + edge_str(e));
    if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end())
      throw Exception("duplicate edge " + edge_str(e));
    if (!sets.unite(u, v)) throw Exception("edge " + edge_str(e) + " closes a cycle");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

}  // namespace

Forest Forest::from_edges(int n, std::span<const Edge> edges) {
  return Forest(build_acyclic<NotAForest>(n, edges));
}

int Forest::edge_count() const {
  int twice = 0;
  for (const auto& list : adj_) twice += static_cast<int>(list.size());
  return twice / 2;
}

bool Forest::adjacent(Vertex u, Vertex v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Forest::edges() const {
  std::vector<Edge> out;
  out.reserve(adj_.size());
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Forest Forest::induced(std::span<const char> keep) const {
  std::vector<int> relabel(adj_.size(), -1);
  int k = 0;
  for (int v = 0; v < order(); ++v)
    if (keep[v]) relabel[v] = k++;
  std::vector<std::vector<Vertex>> adj(k);
  for (int v = 0; v < order(); ++v) {
    if (!keep[v]) continue;
    for (Vertex u : adj_[v])
      if (keep[u]) adj[relabel[v]].push_back(relabel[u]);
  }
  return Forest(std::move(adj));
}

Forest Forest::without(std::span<const Vertex> removed) const {
  std::vector<char> keep(adj_.size(), 1);
  for (Vertex v : removed) keep[v] = 0;
  return induced(keep);
}

std::vector<int> Forest::component_ids(int* count) const {
  std::vector<int> comp(adj_.size(), -1);
  std::vector<Vertex> stack;
  int c = 0;
  for (Vertex s = 0; s < order(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : adj_[v])
        if (comp[u] < 0) {
          comp[u] = c;
          stack.push_back(u);
        }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

Tree::Tree() : Forest(std::vector<std::vector<Vertex>>(1)) {}

Tree Tree::from_edges(int n, std::span<const Edge> edges) {
  if (n < 1) throw NotATree("a tree needs at least one vertex");
  if (static_cast<int>(edges.size()) != n - 1)
    throw NotATree("a tree on " + std::to_string(n) + " vertices needs " + std::to_string(n - 1) +
                   " edges, got " + std::to_string(edges.size()));
  // n-1 edges and no cycle imply connectivity.
  return Tree(build_acyclic<NotATree>(n, edges));
}

Tree Tree::from_parents(std::span<const int> parent) {
  std::vector<Edge> edges;
  edges.reserve(parent.size());
  for (int v = 0; v < static_cast<int>(parent.size()); ++v)
    if (parent[v] >= 0) edges.emplace_back(parent[v], v);
  return from_edges(static_cast<int>(parent.size()), edges);
}

std::vector<Vertex> Tree::leaves() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < order(); ++v)
    if (degree(v) <= 1) out.push_back(v);
  return out;
}

bool Tree::is_path() const {
  for (Vertex v = 0; v < order(); ++v)
    if (degree(v) > 2) return false;
  return true;
}

std::vector<Vertex> Tree::path(Vertex u, Vertex v) const {
  std::vector<Vertex> parent(adj_.size(), -1);
  std::vector<Vertex> stack{u};
  parent[u] = u;
  while (!stack.empty()) {
    Vertex a = stack.back();
    stack.pop_back();
    if (a == v) break;
    for (Vertex b : adj_[a])
      if (parent[b] < 0) {
        parent[b] = a;
        stack.push_back(b);
      }
  }
  std::vector<Vertex> out{v};
  while (out.back() != u) out.push_back(parent[out.back()]);
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<char> Tree::side_of(Vertex start, Vertex blocked) const {
  std::vector<char> seen(adj_.size(), 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    Vertex a = stack.back();
    stack.pop_back();
    for (Vertex b : adj_[a]) {
      if (seen[b] || (a == start && b == blocked)) continue;
      seen[b] = 1;
      stack.push_back(b);
    }
  }
  return seen;
}

Tree Tree::with_pendant(Vertex v) const {
  auto adj = adj_;
  Vertex w = order();
  adj.emplace_back(std::vector<Vertex>{v});
  adj[v].push_back(w);
  return Tree(std::move(adj));
}

Tree Tree::replace_edge(Edge removed, Edge added) const {
  auto list = edges();
  Edge key = std::minmax(removed.first, removed.second);
  auto it = std::find(list.begin(), list.end(), key);
  if (it == list.end()) throw NotATree("edge " + edge_str(removed) + " is not in the tree");
  *it = added;
  return from_edges(order(), list);
}

Tree Tree::without_leaf(Vertex leaf) const {
  if (order() < 2 || degree(leaf) != 1) throw NotATree("vertex is not a removable leaf");
  Vertex removed[] = {leaf};
  return Tree(without(removed));
}

Tree tree_from_edges(int n, std::span<const Edge> edges) { return Tree::from_edges(n, edges); }

Tree path_tree(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Tree::from_edges(n, edges);
}

Tree star_tree(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Tree::from_edges(n, edges);
}

}  // namespace msindex
