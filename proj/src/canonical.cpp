#include "msindex/canonical.hpp"

#include <algorithm>

#include "msindex/error.hpp"

namespace msindex {

std::vector<Vertex> centroids(const Tree& tree) {
  const int n = tree.order();
  std::vector<Vertex> order{0}, parent(n, -1);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (Vertex u : tree.neighbors(order[head]))
      if (!seen[u]) {
        seen[u] = 1;
        parent[u] = order[head];
        order.push_back(u);
      }
  std::vector<int> size(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] >= 0) size[parent[*it]] += size[*it];

  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    int heaviest = n - size[v];
    for (Vertex u : tree.neighbors(v))
      if (u != parent[v]) heaviest = std::max(heaviest, size[u]);
    if (2 * heaviest <= n) out.push_back(v);
  }
  return out;
}

std::string rooted_code(const Tree& tree, Vertex root, std::span<const std::string> labels) {
  const int n = tree.order();
  std::vector<Vertex> order{root}, parent(n, -1);
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (Vertex u : tree.neighbors(order[head]))
      if (!seen[u]) {
        seen[u] = 1;
        parent[u] = order[head];
        order.push_back(u);
      }

  std::vector<std::vector<std::string>> child_codes(n);
  std::string result;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    auto& kids = child_codes[v];
    std::sort(kids.begin(), kids.end());
    std::string code = "(";
    if (!labels.empty()) code += labels[v];
    for (auto& k : kids) code += k;
    code += ')';
    kids.clear();
    kids.shrink_to_fit();
    if (parent[v] >= 0)
      child_codes[parent[v]].push_back(std::move(code));
    else
      result = std::move(code);
  }
  return result;
}

std::string canonical_code_labeled(const Tree& tree, std::span<const std::string> labels) {
  std::string best;
  for (Vertex c : centroids(tree)) {
    std::string code = rooted_code(tree, c, labels);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

CanonicalCode canonical_code(const Tree& tree) { return {canonical_code_labeled(tree, {})}; }

Tree tree_from_code(const CanonicalCode& code) {
  const std::string& s = code.code;
  std::vector<int> parent;
  std::vector<int> stack;
  bool closed_root = false;
  for (char ch : s) {
    if (closed_root) throw ParseError("trailing characters after the root in code '" + s + "'");
    if (ch == '(') {
      parent.push_back(stack.empty() ? -1 : stack.back());
      stack.push_back(static_cast<int>(parent.size()) - 1);
    } else if (ch == ')') {
      if (stack.empty()) throw ParseError("unbalanced code '" + s + "'");
      stack.pop_back();
      closed_root = stack.empty();
    } else {
      throw ParseError("unexpected character in code '" + s + "'");
    }
  }
  if (!closed_root) throw ParseError("unbalanced code '" + s + "'");
  return Tree::from_parents(parent);
}

}  // namespace msindex
