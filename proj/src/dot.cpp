#include "msindex/dot.hpp"

#include <algorithm>
#include <sstream>

namespace msindex {

namespace {

void write_node(std::ostringstream& os, int id, bool white, const std::string& text) {
  os << "  " << id << " [label=\"" << text << "\", style=filled, fillcolor=" << (white ? "white" : "black")
     << ", fontcolor=" << (white ? "black" : "white") << "];\n";
}

}  // namespace

std::string tree_to_dot(const Tree& tree, std::span<const Vertex> centers, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < tree.order(); ++v)
    write_node(os, v, std::find(centers.begin(), centers.end(), v) != centers.end(), std::to_string(v));
  for (auto [u, v] : tree.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string center_tree_to_dot(const CenterTree& ct, int heavy_size, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n  node [shape=circle];\n";
  for (Vertex c = 0; c < ct.size(); ++c) write_node(os, c, ct.labels[c] < heavy_size, std::to_string(ct.labels[c]));
  for (auto [u, v] : ct.shape.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace msindex
