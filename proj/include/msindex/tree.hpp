#pragma once

#include <span>
#include <utility>
#include <vector>

namespace msindex {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// An acyclic simple graph on vertices 0..n-1. Adjacency lists are kept
/// sorted, so two forests with the same edge set compare equal.
class Forest {
 public:
  Forest() = default;

  /// Validates and builds a forest. Throws NotAForest on a cycle, a bad
  /// vertex id, a self-loop or a repeated edge.
  static Forest from_edges(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  bool empty() const { return adj_.empty(); }
  int edge_count() const;

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// The forest induced on the vertices with keep[v] != 0, relabeled
  /// to 0..k-1 in increasing order of original id.
  Forest induced(std::span<const char> keep) const;

  /// Deletes the given vertices (the graph G - S). Relabels like induced().
  Forest without(std::span<const Vertex> removed) const;

  /// Component index per vertex (0-based, in order of smallest member).
  std::vector<int> component_ids(int* count = nullptr) const;

  friend bool operator==(const Forest&, const Forest&) = default;

 protected:
  explicit Forest(std::vector<std::vector<Vertex>> adj) : adj_(std::move(adj)) {}

  std::vector<std::vector<Vertex>> adj_;
};

/// A connected forest with at least one vertex.
class Tree : public Forest {
 public:
  /// Single vertex.
  Tree();

  /// Throws NotATree unless the edges form a spanning tree of 0..n-1.
  static Tree from_edges(int n, std::span<const Edge> edges);

  /// Builds a tree from a parent array (parent[root] = -1). Throws NotATree.
  static Tree from_parents(std::span<const int> parent);

  std::vector<Vertex> leaves() const;
  bool is_path() const;

  /// The unique u-v path, both endpoints included.
  std::vector<Vertex> path(Vertex u, Vertex v) const;

  /// Vertices reachable from `start` without using the edge {start, blocked}.
  std::vector<char> side_of(Vertex start, Vertex blocked) const;

  /// Adds a new vertex n adjacent to v.
  Tree with_pendant(Vertex v) const;

  /// Removes edge {a, b} and adds {c, d}; throws NotATree if the result
  /// is not a tree.
  Tree replace_edge(Edge removed, Edge added) const;

  /// Removes a leaf (the remaining vertices are relabeled). Needs n >= 2.
  Tree without_leaf(Vertex leaf) const;

 private:
  explicit Tree(Forest f) : Forest(std::move(f)) {}
  explicit Tree(std::vector<std::vector<Vertex>> adj) : Forest(std::move(adj)) {}
};

Tree tree_from_edges(int n, std::span<const Edge> edges);

Tree path_tree(int n);
Tree star_tree(int n);

}  // namespace msindex
