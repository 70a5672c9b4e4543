#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "msindex/tree.hpp"

namespace msindex {

/// Exact stable-set counts. Signed so that differences of counts
/// (rotation deltas) share the type.
using Count = mpz_class;

std::string to_string(const Count& c);

/// Largest order for which count_stable_sets_bruteforce runs.
inline constexpr int kBruteForceMaxOrder = 24;

/// Scans all 2^n vertex subsets. Throws TooLarge above kBruteForceMaxOrder.
Count count_stable_sets_bruteforce(const Forest& forest);

/// Number of stable sets (Merrifield-Simmons index), including the empty
/// set. F of the empty forest is 1. Iterative traversal, product over
/// components.
Count merrifield_simmons(const Forest& forest);

/// Maximum size of a stable set.
int stability_number(const Forest& forest);

/// The 2-colouring of a tree; the class containing vertex 0 comes first.
/// Both classes are sorted.
std::pair<std::vector<Vertex>, std::vector<Vertex>> bipartition(const Tree& tree);

/// Parity colour of every vertex (vertex 0 has colour 0).
std::vector<int> two_colouring(const Tree& tree);

/// F and alpha of a rooted tree given as a parent array in which every
/// vertex's parent precedes it (preorder). Exact as long as n <= 63,
/// since F <= 2^n for every forest on n vertices.
struct FastSummary {
  std::uint64_t f = 1;
  int alpha = 0;
};
inline constexpr int kFastPathMaxOrder = 63;
FastSummary summarize_preorder(std::span<const int> parent);

}  // namespace msindex
