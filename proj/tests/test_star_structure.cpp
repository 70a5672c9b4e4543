#include <algorithm>
#include <set>

#include "doctest.h"
#include "msindex/canonical.hpp"
#include "msindex/counting.hpp"
#include "msindex/dot.hpp"
#include "msindex/error.hpp"
#include "msindex/star_structure.hpp"
#include "support.hpp"

using namespace msindex;
using namespace msindex::testing;

namespace {

CenterTree synthetic(const Tree& shape, std::vector<int> labels) { return CenterTree{shape, std::move(labels), {}}; }

// Tree-of-stars test straight from the inductive definition: a single
// vertex, or a new center joined to one leaf of each of several smaller
// trees of stars. Exponential, for small trees only.
bool is_tos_inductive(const Tree& t) {
  const int n = t.order();
  if (n == 1) return true;
  for (Vertex c = 0; c < n; ++c) {
    if (t.degree(c) < 2) continue;
    bool ok = true;
    for (Vertex nb : t.neighbors(c)) {
      auto side = t.side_of(nb, c);
      std::vector<int> relabel(n, -1);
      int k = 0;
      for (Vertex v = 0; v < n; ++v)
        if (side[v]) relabel[v] = k++;
      std::vector<Edge> edges;
      for (auto [u, v] : t.edges())
        if (side[u] && side[v]) edges.emplace_back(relabel[u], relabel[v]);
      auto sub = Tree::from_edges(k, edges);
      if (sub.degree(relabel[nb]) > 1 || !is_tos_inductive(sub)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("classify examples") {
  auto p5 = classify(path_tree(5));
  REQUIRE(std::holds_alternative<TreeOfStars>(p5));
  CHECK(std::get<TreeOfStars>(p5).centers == std::vector<Vertex>{1, 3});

  auto c = classify(chair());
  REQUIRE(std::holds_alternative<AlmostTreeOfStars>(c));
  CHECK(std::get<AlmostTreeOfStars>(c).centers == std::vector<Vertex>{0, 4});
  CHECK(std::get<AlmostTreeOfStars>(c).exposed == 4);

  CHECK(std::holds_alternative<OtherTree>(classify(spider222())));
  CHECK(std::holds_alternative<OddPath>(classify(path_tree(2))));
  CHECK(std::holds_alternative<OddPath>(classify(path_tree(6))));
  auto single = classify(Tree());
  REQUIRE(std::holds_alternative<TreeOfStars>(single));
  CHECK(std::get<TreeOfStars>(single).centers.empty());
  CHECK(class_name(c) == "AlmostTreeOfStars");
}

TEST_CASE("bipartition test agrees with the inductive definition, n <= 11") {
  for (int n = 1; n <= 11; ++n)
    for (const auto& t : all_free_trees(n)) REQUIRE(is_tree_of_stars(t) == is_tos_inductive(t));
}

TEST_CASE("classification invariants, n <= 14") {
  for (int n = 1; n <= 14; ++n)
    for (const auto& t : all_free_trees(n)) {
      auto cls = classify(t);
      if (auto* alm = std::get_if<AlmostTreeOfStars>(&cls)) {
        REQUIRE_FALSE(t.is_path());
        REQUIRE(t.degree(alm->exposed) == 1);
        REQUIRE(is_tree_of_stars(t.with_pendant(alm->exposed)));
      }
      if (std::holds_alternative<OddPath>(cls)) REQUIRE(t.is_path());
      auto* tos = std::get_if<TreeOfStars>(&cls);
      if (!tos) continue;
      const auto& centers = tos->centers;
      std::vector<char> is_center(n, 0);
      for (Vertex v : centers) is_center[v] = 1;
      for (auto [u, v] : t.edges()) REQUIRE(is_center[u] != is_center[v]);
      for (Vertex v = 0; v < n && n >= 3; ++v) {
        if (is_center[v])
          REQUIRE(t.degree(v) >= 2);
        else
          REQUIRE(t.degree(v) <= 2);
      }
      auto mss = unique_max_stable_set(t);
      REQUIRE(static_cast<int>(mss.size()) == stability_number(t));
      if (n >= 3) {
        for (Vertex leaf : t.leaves()) {
          auto sub = classify(t.without_leaf(leaf));
          REQUIRE_FALSE(std::holds_alternative<OtherTree>(sub));
        }
        auto ct = center_tree(t);
        REQUIRE(canonical_code(realize(ct)) == canonical_code(t));
        int total = 0;
        for (int l : ct.labels) total += l;
        REQUIRE(total == n - 1);
        REQUIRE(ct.is_balanced() == is_balanced(t));
      }
    }
}

TEST_CASE("no other stable set reaches alpha in a tree of stars, n <= 14") {
  for (int n = 1; n <= 14; ++n)
    for (const auto& t : all_free_trees(n)) {
      if (!is_tree_of_stars(t)) continue;
      const int a = stability_number(t);
      int hits = 0;
      for (unsigned s = 0; s < (1u << n); ++s) {
        if (__builtin_popcount(s) != a) continue;
        bool ok = true;
        for (auto [u, v] : t.edges())
          if ((s >> u & 1) && (s >> v & 1)) ok = false;
        hits += ok;
      }
      REQUIRE(hits == 1);
    }
}

TEST_CASE("max stable set and balance examples") {
  CHECK(unique_max_stable_set(path_tree(7)) == std::vector<Vertex>{0, 2, 4, 6});
  CHECK(unique_max_stable_set(Tree()) == std::vector<Vertex>{0});
  CHECK_THROWS_AS(unique_max_stable_set(chair()), NotTreeOfStars);
  CHECK_FALSE(is_balanced(two_star(4, 2)));
  CHECK(is_balanced(two_star(3, 3)));
  CHECK_THROWS_AS(is_balanced(path_tree(4)), NotTreeOfStars);
}

TEST_CASE("heavy/light accounting") {
  CHECK(heavy_light(18, 13) == HeavyLight{2, 3, 4, 3});
  auto a = heavy_light(13, 10);
  CHECK(a.heavy == 3);
  CHECK(a.light == 0);
  auto b = heavy_light(24, 21);
  CHECK(b.heavy == 2);
  CHECK(b.light == 1);
  for (int n = 2; n <= 40; ++n)
    for (int al = (n + 1) / 2; al <= n - 1; ++al) {
      auto hl = heavy_light(n, al);
      REQUIRE(hl.heavy + hl.light == n - al);
      REQUIRE(hl.heavy * hl.heavy_size + hl.light * hl.light_size == n - 1);
      REQUIRE(hl.heavy >= 1);
      REQUIRE(hl.light_size == hl.heavy_size - 1);
    }
  CHECK_THROWS_AS(heavy_light(1, 1), BadRange);
  CHECK_THROWS_AS(heavy_light(6, 2), BadRange);
  CHECK_THROWS_AS(heavy_light(6, 6), BadRange);
}

TEST_CASE("center tree and realize") {
  auto ct = center_tree(path_tree(7));
  CHECK(ct.size() == 3);
  CHECK(ct.shape.is_path());
  CHECK(ct.labels == std::vector<int>{2, 2, 2});
  CHECK(ct.origin == std::vector<Vertex>{1, 3, 5});
  CHECK_THROWS_AS(center_tree(Tree()), Degenerate);
  CHECK_THROWS_AS(center_tree(chair()), NotTreeOfStars);

  CHECK(canonical_code(realize(synthetic(path_tree(3), {2, 2, 2}))) == canonical_code(path_tree(7)));
  auto two = realize(synthetic(path_tree(2), {3, 3}));
  CHECK(two.order() == 7);
  CHECK(merrifield_simmons(two) == 41);
  CHECK(count_stable_sets_bruteforce(two) == 41);
  CHECK_THROWS_AS(realize(synthetic(star_tree(4), {2, 2, 2, 2})), InfeasibleLabels);
  CHECK_THROWS_AS(realize(synthetic(path_tree(2), {1, 3})), InfeasibleLabels);
}

TEST_CASE("unbalanced example and its center tree") {
  // Three stars in a row with sizes 5, 2, 3.
  auto t = realize(synthetic(path_tree(3), {5, 2, 3}));
  CHECK(t.order() == 11);
  CHECK_FALSE(is_balanced(t));
  auto ct = center_tree(t);
  CHECK(center_tree_code(ct) == center_tree_code(synthetic(path_tree(3), {3, 2, 5})));
  CHECK(center_tree_code(ct) != center_tree_code(synthetic(path_tree(3), {2, 5, 3})));
}

TEST_CASE("balanced center-tree enumeration examples") {
  auto a = enumerate_balanced_center_trees(7, 5);
  REQUIRE(a.size() == 1);
  CHECK(a[0].labels.size() == 2);
  CHECK(a[0].labels == std::vector<int>{3, 3});

  auto b = enumerate_balanced_center_trees(9, 6);
  REQUIRE(b.size() == 2);
  for (const auto& ct : b) {
    CHECK(ct.shape.is_path());
    auto labels = ct.labels;
    std::sort(labels.begin(), labels.end());
    CHECK(labels == std::vector<int>{2, 3, 3});
  }
  CHECK(enumerate_balanced_center_trees(6, 3).empty());
}

TEST_CASE("balanced center trees match the filtered oracle, n <= 14") {
  for (int n = 3; n <= 14; ++n)
    for (int al = (n + 1) / 2; al <= n - 1; ++al) {
      std::set<std::string> oracle;
      auto s = trees_with_alpha(n, al);
      while (auto t = s.next())
        if (is_tree_of_stars(*t) && is_balanced(*t)) oracle.insert(canonical_code(*t).code);
      std::set<std::string> got;
      for (const auto& ct : enumerate_balanced_center_trees(n, al)) {
        auto t = realize(ct);
        REQUIRE(t.order() == n);
        REQUIRE(stability_number(t) == al);
        REQUIRE(is_balanced(t));
        REQUIRE(got.insert(canonical_code(t).code).second);
      }
      REQUIRE(got == oracle);
    }
}

TEST_CASE("dot export") {
  auto t = path_tree(3);
  std::vector<Vertex> centers{1};
  auto dot = tree_to_dot(t, centers, "P3");
  CHECK(dot.find("graph P3 {") != std::string::npos);
  CHECK(dot.find("0 -- 1") != std::string::npos);
  CHECK(dot.find("1 [label=\"1\", style=filled, fillcolor=white") != std::string::npos);
  CHECK(dot.find("0 [label=\"0\", style=filled, fillcolor=black") != std::string::npos);
  auto cdot = center_tree_to_dot(synthetic(path_tree(2), {3, 2}), 3);
  CHECK(cdot.find("label=\"3\"") != std::string::npos);
  CHECK(cdot.find("label=\"2\"") != std::string::npos);
}
