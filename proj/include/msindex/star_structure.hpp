#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "msindex/enumerate.hpp"
#include "msindex/tree.hpp"

namespace msindex {

// Structure classes. Exactly one applies to every tree.
struct TreeOfStars {
  std::vector<Vertex> centers;  // sorted; empty only for the single vertex
  friend bool operator==(const TreeOfStars&, const TreeOfStars&) = default;
};
struct AlmostTreeOfStars {
  std::vector<Vertex> centers;  // sorted, includes `exposed`
  Vertex exposed = -1;          // the unique center that is also a leaf
  friend bool operator==(const AlmostTreeOfStars&, const AlmostTreeOfStars&) = default;
};
struct OddPath {
  friend bool operator==(const OddPath&, const OddPath&) = default;
};
struct OtherTree {
  friend bool operator==(const OtherTree&, const OtherTree&) = default;
};

using StructureClass = std::variant<TreeOfStars, AlmostTreeOfStars, OddPath, OtherTree>;

StructureClass classify(const Tree& tree);

/// Centers of a tree of stars, or nullopt when the tree is not one. Uses
/// the bipartition test: one colour class holds every leaf and only
/// vertices of degree <= 2; the other class is the center set.
std::optional<std::vector<Vertex>> tree_of_stars_centers(const Tree& tree);

bool is_tree_of_stars(const Tree& tree);
std::string class_name(const StructureClass& c);

/// V - centers. Throws NotTreeOfStars.
std::vector<Vertex> unique_max_stable_set(const Tree& tree);

/// Center degrees differ by at most one. Throws NotTreeOfStars.
bool is_balanced(const Tree& tree);

/// Heavy/light center accounting of balanced trees of stars with n
/// vertices and stability number alpha.
struct HeavyLight {
  int heavy = 0;
  int light = 0;
  int heavy_size = 0;
  int light_size = 0;
  friend bool operator==(const HeavyLight&, const HeavyLight&) = default;
};

/// Throws BadRange unless n >= 2 and n/2 <= alpha <= n-1.
HeavyLight heavy_light(int n, int alpha);

/// Tree on k centers with a star size per center.
struct CenterTree {
  Tree shape;                  // vertices 0..k-1
  std::vector<int> labels;     // star size of each center
  std::vector<Vertex> origin;  // center id in the source tree; empty if synthetic

  int size() const { return shape.order(); }
  bool is_balanced() const;
};

/// Centers adjacent when at distance 2; labels are degrees in `tree`.
/// Throws NotTreeOfStars, or Degenerate when n < 3.
CenterTree center_tree(const Tree& tree);

/// Isomorphism-invariant code of a labeled center tree.
std::string center_tree_code(const CenterTree& ct);

/// Builds the tree of stars: one shared vertex per center-tree edge and
/// label - degree private leaves per center. Centers get ids 0..k-1.
/// Throws InfeasibleLabels when a label is below 2 or below the degree.
Tree realize(const CenterTree& ct);

/// Every isomorphism class of labeled trees on n - alpha nodes with
/// h(n, alpha) heavy and l(n, alpha) light labels, each label at least
/// the node's degree. Empty when some required label would be below 2.
/// Sorted by center_tree_code.
std::vector<CenterTree> enumerate_balanced_center_trees(int n, int alpha);

/// Every isomorphism class of labeled trees on k nodes whose labels lie
/// in [min_label, max_label] and are at least the node degree, with the
/// label total `label_sum`. Sorted by center_tree_code.
std::vector<CenterTree> enumerate_center_trees(int k, int label_sum, int min_label, int max_label);

}  // namespace msindex
