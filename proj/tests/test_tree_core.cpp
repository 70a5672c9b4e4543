#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "msindex/canonical.hpp"
#include "msindex/counting.hpp"
#include "msindex/edge_list.hpp"
#include "msindex/error.hpp"
#include "support.hpp"

using namespace msindex;
using namespace msindex::testing;

TEST_CASE("tree_from_edges validates") {
  auto p2 = tree_from_edges(2, std::vector<Edge>{{0, 1}});
  CHECK(p2.order() == 2);
  CHECK(p2 == path_tree(2));
  auto p4 = tree_from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(p4.is_path());
  CHECK_THROWS_AS(tree_from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}, {1, 2}, {0, 3}}), NotATree);
  CHECK_THROWS_AS(tree_from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}}), NotATree);
  CHECK_THROWS_AS(tree_from_edges(3, std::vector<Edge>{{0, 1}, {0, 1}}), NotATree);
  CHECK_THROWS_AS(tree_from_edges(3, std::vector<Edge>{{0, 1}, {1, 3}}), NotATree);
  CHECK_THROWS_AS(tree_from_edges(2, std::vector<Edge>{{1, 1}}), NotATree);
  CHECK_THROWS_AS(tree_from_edges(0, std::vector<Edge>{}), NotATree);
  CHECK_THROWS_AS(Forest::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}}), NotAForest);
}

TEST_CASE("brute-force counts") {
  CHECK(count_stable_sets_bruteforce(Tree()) == 2);
  CHECK(count_stable_sets_bruteforce(path_tree(4)) == 8);
  CHECK(count_stable_sets_bruteforce(star_tree(4)) == 9);
  CHECK(count_stable_sets_bruteforce(Forest()) == 1);
  CHECK_THROWS_AS(count_stable_sets_bruteforce(path_tree(kBruteForceMaxOrder + 1)), TooLarge);
}

TEST_CASE("merrifield_simmons examples") {
  CHECK(merrifield_simmons(path_tree(7)) == 34);
  CHECK(merrifield_simmons(star_tree(5)) == 17);
  CHECK(count_stable_sets_bruteforce(star_tree(5)) == 17);
  auto two_p2 = Forest::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK(merrifield_simmons(two_p2) == 9);
  CHECK(merrifield_simmons(Forest()) == 1);
  CHECK(merrifield_simmons(Forest::from_edges(3, std::vector<Edge>{})) == 8);
}

TEST_CASE("counts are exact beyond 64 bits") {
  Count expected = 1;
  expected <<= 99;
  expected += 1;
  CHECK(merrifield_simmons(star_tree(100)) == expected);
  CHECK(to_string(merrifield_simmons(star_tree(100))) == expected.get_str());
}

TEST_CASE("iterative traversal handles long paths") {
  auto p = path_tree(20000);
  CHECK(stability_number(p) == 10000);
  auto f = merrifield_simmons(p);
  CHECK(f > 0);
}

TEST_CASE("stability number examples") {
  CHECK(stability_number(path_tree(5)) == 3);
  CHECK(stability_number(star_tree(5)) == 4);
  CHECK(stability_number(chair()) == 3);
  CHECK(alpha_bruteforce(chair()) == 3);
  CHECK(stability_number(Tree()) == 1);
}

TEST_CASE("bipartition orientation") {
  auto [a, b] = bipartition(path_tree(4));
  CHECK(a == std::vector<Vertex>{0, 2});
  CHECK(b == std::vector<Vertex>{1, 3});
  auto [a1, b1] = bipartition(Tree());
  CHECK(a1 == std::vector<Vertex>{0});
  CHECK(b1.empty());
  auto [a2, b2] = bipartition(star_tree(4));
  CHECK(a2 == std::vector<Vertex>{0});
  CHECK(b2 == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("counting agrees with brute force and the deletion recurrence, n <= 12") {
  for (int n = 1; n <= 12; ++n)
    for (const auto& t : all_free_trees(n)) {
      auto f = merrifield_simmons(t);
      REQUIRE(f == count_stable_sets_bruteforce(t));
      if (n <= 10) REQUIRE(stability_number(t) == alpha_bruteforce(t));
      for (Vertex v = 0; v < n; ++v) {
        Vertex only[] = {v};
        auto fv = merrifield_simmons(t.without(only));
        std::vector<Vertex> closed{v};
        for (Vertex u : t.neighbors(v)) closed.push_back(u);
        auto fnv = merrifield_simmons(t.without(closed));
        REQUIRE(f == fv + fnv);
        REQUIRE(fv < f);
        if (t.degree(v) >= 1)
          REQUIRE(f < 2 * fv);
        else
          REQUIRE(f <= 2 * fv);
      }
    }
}

TEST_CASE("paths give Fibonacci numbers") {
  for (int n = 1; n <= 30; ++n) REQUIRE(merrifield_simmons(path_tree(n)) == Count(std::to_string(fib(n + 2))));
}

TEST_CASE("fast preorder summary matches the exact traversal") {
  for (int n = 1; n <= 10; ++n) {
    FreeTreeStream s(n);
    while (auto lv = s.next_levels()) {
      auto parents = parents_from_levels(*lv);
      auto t = tree_from_levels(*lv);
      auto fast = summarize_preorder(parents);
      REQUIRE(Count(std::to_string(fast.f)) == merrifield_simmons(t));
      REQUIRE(fast.alpha == stability_number(t));
    }
  }
  std::vector<int> big(64, 0);
  big[0] = -1;
  CHECK_THROWS_AS(summarize_preorder(big), TooLarge);
}

TEST_CASE("canonical codes") {
  auto p3 = path_tree(3);
  auto p3b = tree_from_edges(3, std::vector<Edge>{{0, 2}, {1, 2}});
  CHECK(canonical_code(p3) == canonical_code(p3b));
  CHECK(canonical_code(path_tree(4)) != canonical_code(star_tree(4)));
  CHECK(canonical_code(path_tree(9)).code.size() == 18);
  CHECK(centroids(path_tree(4)) == std::vector<Vertex>{1, 2});
  CHECK(centroids(path_tree(5)) == std::vector<Vertex>{2});
}

TEST_CASE("canonical code survives 500 random relabelings") {
  std::mt19937_64 rng(16);
  auto t = random_tree(16, rng);
  auto code = canonical_code(t);
  for (int i = 0; i < 500; ++i) REQUIRE(canonical_code(random_relabel(t, rng)) == code);
}

TEST_CASE("code equality matches brute-force isomorphism, n <= 8") {
  std::mt19937_64 rng(8);
  for (int n = 1; n <= 8; ++n) {
    std::vector<Tree> trees;
    for (const auto& t : all_free_trees(n)) {
      trees.push_back(random_relabel(t, rng));
      trees.push_back(random_relabel(t, rng));
    }
    for (int i = 0; i < 20; ++i) trees.push_back(random_tree(n, rng));
    for (std::size_t i = 0; i < trees.size(); ++i)
      for (std::size_t j = i + 1; j < trees.size(); ++j)
        REQUIRE((canonical_code(trees[i]) == canonical_code(trees[j])) == isomorphic_bruteforce(trees[i], trees[j]));
  }
}

TEST_CASE("code decodes to an isomorphic tree") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    auto t = random_tree(1 + i % 20, rng);
    auto back = tree_from_code(canonical_code(t));
    REQUIRE(canonical_code(back) == canonical_code(t));
  }
  CHECK_THROWS_AS(tree_from_code({"(()"}), ParseError);
  CHECK_THROWS_AS(tree_from_code({"()()"}), ParseError);
  CHECK_THROWS_AS(tree_from_code({"(x)"}), ParseError);
  CHECK_THROWS_AS(tree_from_code({""}), ParseError);
}

TEST_CASE("edge-list text format") {
  auto t = parse_edge_list("# chair\n5\n0 1\n0 2\n0 3\n\n3 4\n");
  CHECK(t == chair());
  CHECK(format_edge_list(t) == "5\n0 1\n0 2\n0 3\n3 4\n");
  CHECK(parse_edge_list(format_edge_list(path_tree(6))) == path_tree(6));
  CHECK(parse_edge_list("1\n") == Tree());
  CHECK_THROWS_AS(parse_edge_list("3\n1 0\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 1\r\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 1\n"), NotATree);
  CHECK_THROWS_AS(parse_edge_list("x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 1 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(read_edge_list_file("/nonexistent/tree.txt"), ParseError);
}
