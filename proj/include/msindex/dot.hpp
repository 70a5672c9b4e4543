#pragma once

#include <span>
#include <string>

#include "msindex/star_structure.hpp"
#include "msindex/tree.hpp"

namespace msindex {

/// Graphviz rendering of a tree. Centers are filled white, every other
/// vertex black.
std::string tree_to_dot(const Tree& tree, std::span<const Vertex> centers, const std::string& name = "T");

/// Center tree rendering: heavy centers (label == heavy_size) black,
/// light centers white, node text = star size.
std::string center_tree_to_dot(const CenterTree& ct, int heavy_size, const std::string& name = "C");

}  // namespace msindex
