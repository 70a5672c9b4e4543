#include "msindex/star_structure.hpp"

#include <algorithm>
#include <map>

#include "msindex/canonical.hpp"
#include "msindex/counting.hpp"
#include "msindex/error.hpp"

namespace msindex {

std::optional<std::vector<Vertex>> tree_of_stars_centers(const Tree& tree) {
  const int n = tree.order();
  if (n == 1) return std::vector<Vertex>{};
  auto colour = two_colouring(tree);
  for (int side = 0; side < 2; ++side) {
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      if (colour[v] == side)
        ok = tree.degree(v) <= 2;
      else
        ok = tree.degree(v) >= 2;
    }
    if (!ok) continue;
    std::vector<Vertex> centers;
    for (Vertex v = 0; v < n; ++v)
      if (colour[v] != side) centers.push_back(v);
    return centers;
  }
  return std::nullopt;
}

bool is_tree_of_stars(const Tree& tree) { return tree_of_stars_centers(tree).has_value(); }

StructureClass classify(const Tree& tree) {
  if (auto centers = tree_of_stars_centers(tree)) return TreeOfStars{std::move(*centers)};
  if (tree.is_path()) return OddPath{};

  std::optional<AlmostTreeOfStars> found;
  for (Vertex w : tree.leaves()) {
    auto centers = tree_of_stars_centers(tree.with_pendant(w));
    if (!centers) continue;
    if (found)
      throw ConsistencyError("two leaves (" + std::to_string(found->exposed) + ", " + std::to_string(w) +
                             ") both complete the tree to a tree of stars");
    found = AlmostTreeOfStars{std::move(*centers), w};
  }
  if (found) return *found;
  return OtherTree{};
}

std::string class_name(const StructureClass& c) {
  switch (c.index()) {
    case 0:
      return "TreeOfStars";
    case 1:
      return "AlmostTreeOfStars";
    case 2:
      return "OddPath";
    default:
      return "Other";
  }
}

namespace {

std::vector<Vertex> require_centers(const Tree& tree) {
  auto centers = tree_of_stars_centers(tree);
  if (!centers) throw NotTreeOfStars("the tree is not a tree of stars");
  return *centers;
}

}  // namespace

std::vector<Vertex> unique_max_stable_set(const Tree& tree) {
  auto centers = require_centers(tree);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < tree.order(); ++v)
    if (!std::binary_search(centers.begin(), centers.end(), v)) out.push_back(v);
  return out;
}

bool is_balanced(const Tree& tree) {
  auto centers = require_centers(tree);
  if (centers.empty()) return true;
  auto [lo, hi] = std::minmax_element(centers.begin(), centers.end(),
                                      [&](Vertex a, Vertex b) { return tree.degree(a) < tree.degree(b); });
  return tree.degree(*hi) - tree.degree(*lo) <= 1;
}

HeavyLight heavy_light(int n, int alpha) {
  if (n < 2 || 2 * alpha < n || alpha > n - 1)
    throw BadRange("heavy/light accounting needs n >= 2 and n/2 <= alpha <= n-1, got n=" + std::to_string(n) +
                   " alpha=" + std::to_string(alpha));
  const int k = n - alpha;
  HeavyLight hl;
  hl.heavy_size = (n - 1 + k - 1) / k;
  hl.light_size = hl.heavy_size - 1;
  const int rem = (n - 1) % k;
  hl.heavy = rem != 0 ? rem : k;
  hl.light = k - hl.heavy;
  return hl;
}

bool CenterTree::is_balanced() const {
  if (labels.empty()) return true;
  auto [lo, hi] = std::minmax_element(labels.begin(), labels.end());
  return *hi - *lo <= 1;
}

CenterTree center_tree(const Tree& tree) {
  if (tree.order() < 3) throw Degenerate("center trees need at least 3 vertices");
  auto centers = require_centers(tree);
  std::vector<int> index(tree.order(), -1);
  for (int i = 0; i < static_cast<int>(centers.size()); ++i) index[centers[i]] = i;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < tree.order(); ++u) {
    if (index[u] >= 0 || tree.degree(u) != 2) continue;
    auto nb = tree.neighbors(u);
    edges.emplace_back(std::min(index[nb[0]], index[nb[1]]), std::max(index[nb[0]], index[nb[1]]));
  }
  CenterTree ct{Tree::from_edges(static_cast<int>(centers.size()), edges), {}, centers};
  for (Vertex c : centers) ct.labels.push_back(tree.degree(c));
  return ct;
}

std::string center_tree_code(const CenterTree& ct) {
  std::vector<std::string> labels;
  labels.reserve(ct.labels.size());
  for (int l : ct.labels) labels.push_back(std::to_string(l));
  return canonical_code_labeled(ct.shape, labels);
}

Tree realize(const CenterTree& ct) {
  const int k = ct.size();
  if (static_cast<int>(ct.labels.size()) != k) throw InfeasibleLabels("one label per center is required");
  int order = 1;
  for (int c = 0; c < k; ++c) {
    if (ct.labels[c] < 2 || ct.labels[c] < ct.shape.degree(c))
      throw InfeasibleLabels("center " + std::to_string(c) + " has label " + std::to_string(ct.labels[c]) +
                             " but needs at least max(2, " + std::to_string(ct.shape.degree(c)) + ")");
    order += ct.labels[c];
  }
  std::vector<Edge> edges;
  Vertex next = k;
  for (auto [a, b] : ct.shape.edges()) {
    edges.emplace_back(a, next);
    edges.emplace_back(b, next);
    ++next;
  }
  for (int c = 0; c < k; ++c)
    for (int i = ct.shape.degree(c); i < ct.labels[c]; ++i) edges.emplace_back(c, next++);
  return Tree::from_edges(order, edges);
}

std::vector<CenterTree> enumerate_center_trees(int k, int label_sum, int min_label, int max_label) {
  std::map<std::string, CenterTree> classes;
  if (k < 1 || min_label > max_label) return {};
  FreeTreeStream shapes(k);
  while (auto shape = shapes.next()) {
    std::vector<int> labels(k, 0);
    // Suffix bounds of the remaining label mass, for pruning.
    std::vector<int> floor_at(k);
    for (int v = 0; v < k; ++v) floor_at[v] = std::max(min_label, shape->degree(v));
    std::vector<int> min_rest(k + 1, 0);
    for (int v = k - 1; v >= 0; --v) min_rest[v] = min_rest[v + 1] + floor_at[v];

    auto assign = [&](auto&& self, int v, int remaining) -> void {
      if (v == k) {
        if (remaining != 0) return;
        CenterTree ct{*shape, labels, {}};
        auto code = center_tree_code(ct);
        classes.emplace(std::move(code), std::move(ct));
        return;
      }
      const int rest_max = (k - v - 1) * max_label;
      for (int l = floor_at[v]; l <= max_label; ++l) {
        int left = remaining - l;
        if (left < min_rest[v + 1]) break;
        if (left > rest_max) continue;
        labels[v] = l;
        self(self, v + 1, left);
      }
    };
    assign(assign, 0, label_sum);
  }
  std::vector<CenterTree> out;
  out.reserve(classes.size());
  for (auto& [code, ct] : classes) out.push_back(std::move(ct));
  return out;
}

std::vector<CenterTree> enumerate_balanced_center_trees(int n, int alpha) {
  HeavyLight hl = heavy_light(n, alpha);
  if (hl.heavy_size < 2 || (hl.light > 0 && hl.light_size < 2)) return {};
  const int low = hl.light > 0 ? hl.light_size : hl.heavy_size;
  return enumerate_center_trees(n - alpha, n - 1, low, hl.heavy_size);
}

}  // namespace msindex
