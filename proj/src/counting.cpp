#include "msindex/counting.hpp"

#include <algorithm>

#include "msindex/error.hpp"

namespace msindex {

namespace {

// Vertices of one component in BFS order, with parents. Children always
// appear after their parent, so a reverse sweep is a post-order.
void bfs_order(const Forest& forest, Vertex root, std::vector<char>& seen, std::vector<Vertex>& order,
               std::vector<Vertex>& parent) {
  order.clear();
  order.push_back(root);
  seen[root] = 1;
  parent[root] = -1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    Vertex v = order[head];
    for (Vertex u : forest.neighbors(v)) {
      if (seen[u]) continue;
      seen[u] = 1;
      parent[u] = v;
      order.push_back(u);
    }
  }
}

}  // namespace

std::string to_string(const Count& c) { return c.get_str(); }

Count count_stable_sets_bruteforce(const Forest& forest) {
  const int n = forest.order();
  if (n > kBruteForceMaxOrder)
    throw TooLarge("brute-force counting is limited to " + std::to_string(kBruteForceMaxOrder) + " vertices");
  std::vector<std::uint32_t> neighbour_mask(n, 0);
  for (auto [u, v] : forest.edges()) {
    neighbour_mask[u] |= 1u << v;
    neighbour_mask[v] |= 1u << u;
  }
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool stable = true;
    for (int v = 0; v < n && stable; ++v)
      if ((s >> v & 1) && (neighbour_mask[v] & s)) stable = false;
    count += stable;
  }
  return Count(static_cast<unsigned long>(count));
}

Count merrifield_simmons(const Forest& forest) {
  const int n = forest.order();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> order, parent(n, -1);
  // excluded[v]: stable sets of the subtree at v avoiding v; included[v]: containing v.
  std::vector<Count> excluded(n, 1), included(n, 1);
  Count total = 1;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    bfs_order(forest, root, seen, order, parent);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Vertex v = *it;
      Vertex p = parent[v];
      if (p < 0) continue;
      excluded[p] *= excluded[v] + included[v];
      included[p] *= excluded[v];
    }
    total *= excluded[root] + included[root];
  }
  return total;
}

int stability_number(const Forest& forest) {
  const int n = forest.order();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> order, parent(n, -1);
  std::vector<int> excluded(n, 0), included(n, 1);
  int total = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    bfs_order(forest, root, seen, order, parent);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Vertex v = *it;
      Vertex p = parent[v];
      if (p < 0) continue;
      excluded[p] += std::max(excluded[v], included[v]);
      included[p] += excluded[v];
    }
    total += std::max(excluded[root], included[root]);
  }
  return total;
}

std::vector<int> two_colouring(const Tree& tree) {
  std::vector<int> colour(tree.order(), -1);
  std::vector<Vertex> queue{0};
  colour[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex u : tree.neighbors(v))
      if (colour[u] < 0) {
        colour[u] = 1 - colour[v];
        queue.push_back(u);
      }
  }
  return colour;
}

std::pair<std::vector<Vertex>, std::vector<Vertex>> bipartition(const Tree& tree) {
  auto colour = two_colouring(tree);
  std::pair<std::vector<Vertex>, std::vector<Vertex>> out;
  for (Vertex v = 0; v < tree.order(); ++v) (colour[v] == 0 ? out.first : out.second).push_back(v);
  return out;
}

FastSummary summarize_preorder(std::span<const int> parent) {
  const int n = static_cast<int>(parent.size());
  if (n < 1 || n > kFastPathMaxOrder) throw TooLarge("fast counting needs 1 <= n <= 63");
  std::uint64_t excluded[kFastPathMaxOrder + 1];
  std::uint64_t included[kFastPathMaxOrder + 1];
  int a_excluded[kFastPathMaxOrder + 1];
  int a_included[kFastPathMaxOrder + 1];
  for (int v = 0; v < n; ++v) {
    excluded[v] = included[v] = 1;
    a_excluded[v] = 0;
    a_included[v] = 1;
  }
  for (int v = n - 1; v > 0; --v) {
    int p = parent[v];
    excluded[p] *= excluded[v] + included[v];
    included[p] *= excluded[v];
    a_excluded[p] += std::max(a_excluded[v], a_included[v]);
    a_included[p] += a_excluded[v];
  }
  return {excluded[0] + included[0], std::max(a_excluded[0], a_included[0])};
}

}  // namespace msindex
