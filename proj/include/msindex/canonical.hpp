#pragma once

#include <span>
#include <string>
#include <vector>

#include "msindex/tree.hpp"

namespace msindex {

/// Balanced-parenthesis encoding of a tree, rooted at its centroid (the
/// lexicographically smaller encoding when there are two centroids).
/// Equal codes <=> isomorphic trees. Length is 2n.
struct CanonicalCode {
  std::string code;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

CanonicalCode canonical_code(const Tree& tree);

/// Same encoding with a label written after every opening parenthesis.
/// Labels must not contain '(' or ')'. Equal codes <=> isomorphic as
/// labeled trees.
std::string canonical_code_labeled(const Tree& tree, std::span<const std::string> labels);

/// Canonical encoding of the tree rooted at `root` (AHU).
std::string rooted_code(const Tree& tree, Vertex root, std::span<const std::string> labels = {});

/// Centroid vertices (one or two), ascending.
std::vector<Vertex> centroids(const Tree& tree);

/// Rebuilds a tree from an unlabeled code; vertex ids follow the order of
/// opening parentheses. Throws ParseError on a malformed code.
Tree tree_from_code(const CanonicalCode& code);

}  // namespace msindex
