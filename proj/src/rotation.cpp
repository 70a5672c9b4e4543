#include "msindex/rotation.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

#include "msindex/error.hpp"
#include "msindex/star_structure.hpp"

namespace msindex {

Rotation parse_rotation(std::string_view text) {
  Rotation rot;
  int* fields[] = {&rot.y, &rot.x, &rot.x_new};
  const char* p = text.data();
  const char* end = text.data() + text.size();
  for (int i = 0; i < 3; ++i) {
    if (i > 0) {
      if (p == end || *p != ' ') throw ParseError("rotation must be 'y x x_new', got '" + std::string(text) + "'");
      ++p;
    }
    if (p == end || *p < '0' || *p > '9')
      throw ParseError("rotation must be 'y x x_new', got '" + std::string(text) + "'");
    auto [next, ec] = std::from_chars(p, end, *fields[i]);
    if (ec != std::errc()) throw ParseError("rotation must be 'y x x_new', got '" + std::string(text) + "'");
    p = next;
  }
  if (p != end) throw ParseError("rotation must be 'y x x_new', got '" + std::string(text) + "'");
  return rot;
}

std::string format_rotation(const Rotation& rot) {
  return std::to_string(rot.y) + ' ' + std::to_string(rot.x) + ' ' + std::to_string(rot.x_new);
}

void validate_rotation(const Tree& tree, const Rotation& rot) {
  const int n = tree.order();
  auto in_range = [n](Vertex v) { return v >= 0 && v < n; };
  if (!in_range(rot.y) || !in_range(rot.x) || !in_range(rot.x_new))
    throw InvalidRotation("rotation " + format_rotation(rot) + " names a vertex outside 0.." + std::to_string(n - 1));
  if (!tree.adjacent(rot.y, rot.x))
    throw InvalidRotation("rotation " + format_rotation(rot) + ": y and x are not adjacent");
  if (rot.x_new == rot.x) throw InvalidRotation("rotation " + format_rotation(rot) + ": x_new equals x");
  if (!tree.side_of(rot.x, rot.y)[rot.x_new])
    throw InvalidRotation("rotation " + format_rotation(rot) + ": x_new is not on x's side of edge y-x");
}

Tree apply_rotation(const Tree& tree, const Rotation& rot) {
  validate_rotation(tree, rot);
  return tree.replace_edge({rot.y, rot.x}, {std::min(rot.y, rot.x_new), std::max(rot.y, rot.x_new)});
}

RotationDecomposition decompose(const Tree& tree, const Rotation& rot) {
  validate_rotation(tree, rot);
  const int n = tree.order();
  const Vertex x = rot.x, xn = rot.x_new;

  // Components of T - {x, x_new}.
  std::vector<int> comp(n, -1);
  comp[x] = comp[xn] = -2;
  int next_id = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<Vertex> stack{s};
    comp[s] = next_id;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : tree.neighbors(v))
        if (comp[u] == -1) {
          comp[u] = next_id;
          stack.push_back(u);
        }
    }
    ++next_id;
  }
  // F(T_v - removed), with T_v the component holding v.
  auto count = [&](Vertex v, std::initializer_list<Vertex> removed) {
    std::vector<char> keep(n, 0);
    for (Vertex u = 0; u < n; ++u) keep[u] = comp[u] == comp[v];
    for (Vertex r : removed) keep[r] = 0;
    return merrifield_simmons(tree.induced(keep));
  };

  const auto path = tree.path(x, xn);
  const bool adjacent = path.size() == 2;
  const Vertex z = path[1];
  const Vertex zp = path[path.size() - 2];

  RotationDecomposition d{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, std::nullopt, std::nullopt};
  for (Vertex xi : tree.neighbors(x)) {
    if (xi == z || xi == rot.y) continue;
    d.X *= count(xi, {});
    d.Xbar *= count(xi, {xi});
  }
  for (Vertex xi : tree.neighbors(xn)) {
    if (xi == zp) continue;
    d.Xp *= count(xi, {});
    d.Xpbar *= count(xi, {xi});
  }
  d.Y = count(rot.y, {});
  d.Ybar = count(rot.y, {rot.y});
  if (!adjacent) {
    d.z = z;
    d.z_new = zp;
    d.Z = count(z, {});
    d.Zbar_z = count(z, {z});
    d.Zbar_zp = count(z, {zp});
    d.Zbar_zzp = count(z, {z, zp});
  }
  return d;
}

DeltaIdentity f_delta_identity(const Tree& tree, const Rotation& rot) {
  auto d = decompose(tree, rot);
  DeltaIdentity out;
  out.lhs = merrifield_simmons(tree) - merrifield_simmons(apply_rotation(tree, rot));
  out.rhs = (d.X * d.Xpbar * d.Zbar_zp - d.Xbar * d.Xp * d.Zbar_z) * (d.Y - d.Ybar);
  return out;
}

bool decreases_f(const RotationDecomposition& d) { return d.X * d.Xpbar * d.Zbar_zp > d.Xbar * d.Xp * d.Zbar_z; }

bool is_good(const Tree& tree, const Rotation& rot) {
  auto d = decompose(tree, rot);
  if (!decreases_f(d)) return false;
  return stability_number(apply_rotation(tree, rot)) == stability_number(tree);
}

std::optional<Rotation> find_good_rotation(const Tree& tree) {
  const int alpha = stability_number(tree);
  for (Vertex y = 0; y < tree.order(); ++y)
    for (Vertex x : tree.neighbors(y)) {
      auto side = tree.side_of(x, y);
      for (Vertex x_new = 0; x_new < tree.order(); ++x_new) {
        if (!side[x_new] || x_new == x) continue;
        Rotation rot{y, x, x_new};
        if (decreases_f(decompose(tree, rot)) && stability_number(apply_rotation(tree, rot)) == alpha) return rot;
      }
    }
  return std::nullopt;
}

namespace {

// The subgraph induced by `keep` as a Tree (keep must be connected).
Tree induced_tree(const Tree& tree, const std::vector<char>& keep) {
  std::vector<int> id(tree.order(), -1);
  int k = 0;
  for (Vertex v = 0; v < tree.order(); ++v)
    if (keep[v]) id[v] = k++;
  std::vector<Edge> edges;
  for (auto [a, b] : tree.edges())
    if (keep[a] && keep[b]) edges.emplace_back(id[a], id[b]);
  return Tree::from_edges(k, edges);
}

struct RootedView {
  std::vector<Vertex> parent;
  std::vector<int> depth;
  std::vector<std::vector<Vertex>> children;
  std::vector<Vertex> order;  // BFS from the root
};

RootedView root_at(const Tree& tree, Vertex root) {
  const int n = tree.order();
  RootedView view{std::vector<Vertex>(n, -1), std::vector<int>(n, 0), std::vector<std::vector<Vertex>>(n), {root}};
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  for (std::size_t h = 0; h < view.order.size(); ++h) {
    Vertex v = view.order[h];
    for (Vertex u : tree.neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        view.parent[u] = v;
        view.depth[u] = view.depth[v] + 1;
        view.children[v].push_back(u);
        view.order.push_back(u);
      }
  }
  return view;
}

std::vector<char> descendants(const RootedView& view, Vertex v) {
  std::vector<char> mark(view.parent.size(), 0);
  std::vector<Vertex> stack{v};
  mark[v] = 1;
  while (!stack.empty()) {
    Vertex a = stack.back();
    stack.pop_back();
    for (Vertex c : view.children[a]) {
      mark[c] = 1;
      stack.push_back(c);
    }
  }
  return mark;
}

// A leaf root r is usable when its neighbour having degree 2 implies
// that T - r is not a tree of stars.
bool root_condition_holds(const Tree& tree, Vertex r) {
  Vertex nb = tree.neighbors(r)[0];
  return tree.degree(nb) != 2 || !is_tree_of_stars(tree.without_leaf(r));
}

Vertex choose_root(const Tree& tree) {
  Vertex r = tree.leaves().front();
  if (root_condition_holds(tree, r)) return r;
  // T - r is a tree of stars but not a path; a vertex of degree >= 3 is
  // one of its centers. Re-root at a leaf beyond it, away from r.
  Vertex w = -1;
  for (Vertex v = 0; v < tree.order() && w < 0; ++v)
    if (tree.degree(v) >= 3) w = v;
  if (w < 0) throw ConsistencyError("root re-selection found no vertex of degree >= 3");
  for (Vertex u : tree.neighbors(w)) {
    auto side = tree.side_of(u, w);
    if (side[r]) continue;
    for (Vertex leaf : tree.leaves())
      if (side[leaf]) {
        if (!root_condition_holds(tree, leaf)) throw ConsistencyError("re-selected root violates the root condition");
        return leaf;
      }
  }
  throw ConsistencyError("root re-selection found no component avoiding the first root");
}

}  // namespace

namespace {

// The rotation the proof builds around the deepest witness u, or nullopt
// when neither rotation of the third case is good for this witness.
std::optional<Rotation> rotation_at_witness(const Tree& tree, const RootedView& view, Vertex u) {
  const int n = tree.order();
  const Vertex v1 = view.parent[u];
  const Vertex v = v1 >= 0 ? view.parent[v1] : -1;
  if (v1 < 0 || v < 0 || view.parent[v] < 0) throw ConsistencyError("witness too close to the root");
  const Vertex v_up = view.parent[v];

  const auto t1 = descendants(view, v1);
  std::vector<Vertex> t1_leaves;
  for (Vertex a = 0; a < n; ++a)
    if (t1[a] && a != v1 && tree.degree(a) == 1) t1_leaves.push_back(a);
  if (t1_leaves.empty()) throw ConsistencyError("no leaf of T_1 besides v_1");
  const Vertex w = t1_leaves.front();

  bool some_c1 = false;
  bool all_c2 = true;
  for (Vertex vi : view.children[v]) {
    if (vi == v1) continue;
    auto ti = descendants(view, vi);
    bool c1 = view.children[vi].size() <= 1 && is_tree_of_stars(induced_tree(tree, ti));
    ti[v] = 1;
    bool c2 = is_tree_of_stars(induced_tree(tree, ti));
    some_c1 = some_c1 || c1;
    all_c2 = all_c2 && c2;
  }
  bool t1_is_path = true;
  for (Vertex a = 0; a < n; ++a) {
    if (!t1[a]) continue;
    int inside = 0;
    for (Vertex b : tree.neighbors(a)) inside += t1[b];
    if (inside > 2) t1_is_path = false;
  }

  // The path case needs v_1 to be an end of T_1; a path through v_1 has
  // deg(v_1) >= 3 and is handled by the second rotation.
  if (some_c1) return t1_is_path && tree.degree(v1) == 2 ? Rotation{v_up, v, w} : Rotation{v, v1, w};
  if (!all_c2) throw ConsistencyError("a child subtree of v satisfies neither witness condition");

  // rho1 keeps alpha for every leaf w of T_1; take the first w whose
  // sign test shows a strict drop in F.
  for (Vertex leaf : t1_leaves) {
    const Rotation r{v_up, v, leaf};
    if (decreases_f(decompose(tree, r))) return r;
  }
  for (Vertex leaf : t1_leaves) {
    const Rotation r{v, v1, tree.neighbors(leaf)[0]};
    if (r.x_new != v1 && is_good(tree, r)) return r;
  }
  return std::nullopt;
}

}  // namespace

Rotation construct_good_rotation_nontos(const Tree& tree) {
  if (tree.is_path()) throw NotApplicable("the tree is a path");
  if (is_tree_of_stars(tree)) throw NotApplicable("the tree is a tree of stars");

  const int n = tree.order();
  const Vertex root = choose_root(tree);
  const RootedView view = root_at(tree, root);

  // witness_ok[v]: the rooted subtree T_v is a tree of stars with v as a leaf.
  std::vector<char> witness_ok(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (view.children[v].size() > 1) continue;
    witness_ok[v] = is_tree_of_stars(induced_tree(tree, descendants(view, v)));
  }

  std::vector<Vertex> witnesses;
  for (Vertex leaf : tree.leaves()) {
    if (leaf == root) continue;
    Vertex witness = leaf;
    for (Vertex a = leaf; a >= 0; a = view.parent[a])
      if (witness_ok[a]) witness = a;
    witnesses.push_back(witness);
  }
  int max_depth = 0;
  for (Vertex x : witnesses) max_depth = std::max(max_depth, view.depth[x]);
  std::sort(witnesses.begin(), witnesses.end());
  witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());

  for (Vertex u : witnesses) {
    if (view.depth[u] != max_depth) continue;
    if (auto r = rotation_at_witness(tree, view, u)) return *r;
  }
  throw ConsistencyError("no deepest witness yields a good rotation");
}

Rotation rebalance_rotation(const Tree& tree) {
  auto centers = tree_of_stars_centers(tree);
  if (!centers) throw NotApplicable("the tree is not a tree of stars");
  if (is_balanced(tree)) throw NotApplicable("the tree of stars is already balanced");
  Vertex x = centers->front(), x_new = centers->front();
  for (Vertex c : *centers) {
    if (tree.degree(c) > tree.degree(x)) x = c;
    if (tree.degree(c) < tree.degree(x_new)) x_new = c;
  }
  const Vertex towards = tree.path(x, x_new)[1];
  for (Vertex y : tree.neighbors(x))
    if (y != towards) return Rotation{y, x, x_new};
  throw ConsistencyError("maximum-degree center has no neighbour off the path");
}

}  // namespace msindex
