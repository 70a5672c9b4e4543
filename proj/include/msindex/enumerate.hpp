#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "msindex/tree.hpp"

namespace msindex {

/// Depth of each vertex in preorder of a rooted tree; entry 0 is the root.
using LevelSequence = std::vector<int>;

/// Preorder parent array of a level sequence (parent[0] = -1).
std::vector<int> parents_from_levels(std::span<const int> levels);
Tree tree_from_levels(std::span<const int> levels);

/// True when `levels` is a valid level sequence whose root is a centre of
/// the tree and whose sibling subtrees appear in non-increasing
/// lexicographic order. Every sequence FreeTreeStream emits satisfies it.
bool is_canonical_free_levels(std::span<const int> levels);

/// Isomorph-free stream of all free trees of order n (Wright, Richmond,
/// Odlyzko and McKay successor rule over centre-rooted level sequences).
/// Memory is O(n); emission order is fixed for a given n.
class FreeTreeStream {
 public:
  static constexpr int kMaxOrder = 26;

  /// Throws BudgetExceeded unless 1 <= n <= kMaxOrder.
  explicit FreeTreeStream(int n);

  /// A stream positioned just after `cursor`, which must be a sequence
  /// previously emitted for the same n.
  static FreeTreeStream resume(int n, const LevelSequence& cursor);

  int order() const { return n_; }

  std::optional<LevelSequence> next_levels();
  std::optional<Tree> next();

  /// Appends up to `max` sequences to `out`; returns how many were added.
  std::size_t next_batch(std::vector<LevelSequence>& out, std::size_t max);

  /// The most recently emitted sequence (empty before the first).
  const LevelSequence& cursor() const { return last_; }

 private:
  int n_;
  std::optional<LevelSequence> pending_;
  LevelSequence last_;
};

/// Splits `stream` into contiguous batches consumed by `jobs` worker
/// threads. `consume(worker, batch)` may run concurrently for different
/// workers; each emitted sequence reaches exactly one batch.
void consume_in_parallel(FreeTreeStream& stream, int jobs, std::size_t batch_size,
                         const std::function<void(int, std::span<const LevelSequence>)>& consume);

/// Sub-stream of FreeTreeStream(n) restricted to stability number alpha.
class AlphaFilteredStream {
 public:
  AlphaFilteredStream(int n, int alpha);
  std::optional<Tree> next();
  std::optional<LevelSequence> next_levels();

 private:
  FreeTreeStream base_;
  int alpha_;
  bool feasible_;
};

/// Out-of-range alpha yields an empty stream.
AlphaFilteredStream trees_with_alpha(int n, int alpha);

inline FreeTreeStream enumerate_free_trees(int n) { return FreeTreeStream(n); }

/// Decodes a Prüfer sequence (length n-2, entries in 0..n-1).
Tree prufer_decode(int n, std::span<const int> sequence);

/// Every labeled tree on {0..n-1}, one per Prüfer sequence (n^(n-2) in
/// total). Throws TooLarge for n > kMaxOrder.
class LabeledTreeStream {
 public:
  static constexpr int kMaxOrder = 9;
  explicit LabeledTreeStream(int n);
  std::optional<Tree> next();

 private:
  int n_;
  std::vector<int> sequence_;
  bool done_ = false;
};

inline LabeledTreeStream enumerate_labeled_trees(int n) { return LabeledTreeStream(n); }

}  // namespace msindex
