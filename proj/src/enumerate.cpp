#include "msindex/enumerate.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "msindex/counting.hpp"
#include "msindex/error.hpp"

namespace msindex {

namespace {

// One Beyer-Hedetniemi step: the next rooted level sequence in
// decreasing lexicographic order, regenerating the suffix from p.
std::optional<LevelSequence> next_rooted(const LevelSequence& pred, int p) {
  if (p == 0) return std::nullopt;
  int q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  LevelSequence result = pred;
  for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

std::optional<LevelSequence> next_rooted(const LevelSequence& pred) {
  int p = static_cast<int>(pred.size()) - 1;
  while (p > 0 && pred[p] == 1) --p;
  return next_rooted(pred, p);
}

// Index of the second depth-1 vertex (start of the root's second
// subtree), or n if the root has a single child.
int second_child(const LevelSequence& layout) {
  bool seen_one = false;
  for (std::size_t i = 0; i < layout.size(); ++i)
    if (layout[i] == 1) {
      if (seen_one) return static_cast<int>(i);
      seen_one = true;
    }
  return static_cast<int>(layout.size());
}

// A free-tree layout is valid when the root's first subtree ("left") is
// no taller than the rest of the tree, and, at equal height, no larger
// and not lexicographically after the rest.
LevelSequence next_free(const LevelSequence& candidate) {
  const int m = second_child(candidate);
  LevelSequence left, rest{0};
  for (int i = 1; i < m; ++i) left.push_back(candidate[i] - 1);
  for (std::size_t i = m; i < candidate.size(); ++i) rest.push_back(candidate[i]);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());

  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size())
      valid = false;
    else if (left.size() == rest.size() && left > rest)
      valid = false;
  }
  if (valid) return candidate;

  // Jump past every rooted sequence sharing the invalid left subtree.
  const int p = static_cast<int>(left.size());
  LevelSequence jumped = *next_rooted(candidate, p);
  if (candidate[p] > 2) {
    const int jm = second_child(jumped);
    int new_left_height = 0;
    for (int i = 1; i < jm; ++i) new_left_height = std::max(new_left_height, jumped[i] - 1);
    const int suffix = new_left_height + 1;
    for (int j = 0; j < suffix; ++j) jumped[jumped.size() - suffix + j] = j + 1;
  }
  return jumped;
}

LevelSequence initial_layout(int n) {
  LevelSequence layout;
  for (int i = 0; i <= n / 2; ++i) layout.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) layout.push_back(i);
  return layout;
}

}  // namespace

std::vector<int> parents_from_levels(std::span<const int> levels) {
  std::vector<int> parent(levels.size(), -1);
  std::vector<int> stack;
  for (int i = 0; i < static_cast<int>(levels.size()); ++i) {
    while (!stack.empty() && levels[stack.back()] >= levels[i]) stack.pop_back();
    if (!stack.empty()) parent[i] = stack.back();
    stack.push_back(i);
  }
  return parent;
}

Tree tree_from_levels(std::span<const int> levels) { return Tree::from_parents(parents_from_levels(levels)); }

bool is_canonical_free_levels(std::span<const int> levels) {
  const int n = static_cast<int>(levels.size());
  if (n == 0 || levels[0] != 0) return false;
  for (int i = 1; i < n; ++i)
    if (levels[i] < 1 || levels[i] > levels[i - 1] + 1) return false;

  // Subtree of i spans [i, end[i]).
  std::vector<int> end(n, n);
  {
    std::vector<int> stack;
    for (int i = 0; i < n; ++i) {
      while (!stack.empty() && levels[stack.back()] >= levels[i]) {
        end[stack.back()] = i;
        stack.pop_back();
      }
      stack.push_back(i);
    }
  }
  auto parent = parents_from_levels(levels);
  std::vector<int> last_child(n, -1);
  for (int i = 1; i < n; ++i) {
    int p = parent[i];
    if (int prev = last_child[p]; prev >= 0) {
      if (std::lexicographical_compare(levels.begin() + prev, levels.begin() + end[prev], levels.begin() + i,
                                       levels.begin() + end[i]))
        return false;
    }
    last_child[p] = i;
  }

  // The root must be a centre: its eccentricity equals the radius.
  Tree tree = tree_from_levels(levels);
  auto eccentricity = [&](Vertex s) {
    std::vector<int> dist(n, -1);
    std::vector<Vertex> queue{s};
    dist[s] = 0;
    int far = 0;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (Vertex u : tree.neighbors(queue[h]))
        if (dist[u] < 0) {
          dist[u] = dist[queue[h]] + 1;
          far = std::max(far, dist[u]);
          queue.push_back(u);
        }
    return far;
  };
  int radius = n;
  for (Vertex v = 0; v < n; ++v) radius = std::min(radius, eccentricity(v));
  return eccentricity(0) == radius;
}

FreeTreeStream::FreeTreeStream(int n) : n_(n) {
  if (n < 1 || n > kMaxOrder)
    throw BudgetExceeded("free-tree enumeration supports 1 <= n <= " + std::to_string(kMaxOrder) + ", got " +
                         std::to_string(n));
  pending_ = initial_layout(n);
}

FreeTreeStream FreeTreeStream::resume(int n, const LevelSequence& cursor) {
  FreeTreeStream stream(n);
  if (static_cast<int>(cursor.size()) != n) throw BadRange("cursor length does not match the order");
  stream.last_ = cursor;
  stream.pending_ = n == 1 ? std::nullopt : next_rooted(cursor);
  return stream;
}

std::optional<LevelSequence> FreeTreeStream::next_levels() {
  if (!pending_) return std::nullopt;
  if (n_ == 1) {
    last_ = *pending_;
    pending_.reset();
    return last_;
  }
  last_ = next_free(*pending_);
  pending_ = next_rooted(last_);
  return last_;
}

std::optional<Tree> FreeTreeStream::next() {
  auto levels = next_levels();
  if (!levels) return std::nullopt;
  return tree_from_levels(*levels);
}

std::size_t FreeTreeStream::next_batch(std::vector<LevelSequence>& out, std::size_t max) {
  std::size_t added = 0;
  while (added < max) {
    auto levels = next_levels();
    if (!levels) break;
    out.push_back(std::move(*levels));
    ++added;
  }
  return added;
}

void consume_in_parallel(FreeTreeStream& stream, int jobs, std::size_t batch_size,
                         const std::function<void(int, std::span<const LevelSequence>)>& consume) {
  jobs = std::max(1, jobs);
  batch_size = std::max<std::size_t>(1, batch_size);
  if (jobs == 1) {
    std::vector<LevelSequence> batch;
    while (stream.next_batch(batch, batch_size) > 0) {
      consume(0, batch);
      batch.clear();
    }
    return;
  }
  std::mutex source_mutex;
  std::exception_ptr failure;
  bool stop = false;
  auto worker = [&](int id) {
    std::vector<LevelSequence> batch;
    for (;;) {
      batch.clear();
      {
        std::lock_guard lock(source_mutex);
        if (stop || stream.next_batch(batch, batch_size) == 0) return;
      }
      try {
        consume(id, batch);
      } catch (...) {
        std::lock_guard lock(source_mutex);
        if (!failure) failure = std::current_exception();
        stop = true;
        return;
      }
    }
  };
  {
    std::vector<std::jthread> threads;
    for (int id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
  }
  if (failure) std::rethrow_exception(failure);
}

AlphaFilteredStream::AlphaFilteredStream(int n, int alpha) : base_(n), alpha_(alpha) {
  feasible_ = n == 1 ? alpha == 1 : (alpha >= (n + 1) / 2 && alpha <= n - 1);
}

std::optional<LevelSequence> AlphaFilteredStream::next_levels() {
  if (!feasible_) return std::nullopt;
  while (auto levels = base_.next_levels()) {
    auto parent = parents_from_levels(*levels);
    if (summarize_preorder(parent).alpha == alpha_) return levels;
  }
  return std::nullopt;
}

std::optional<Tree> AlphaFilteredStream::next() {
  auto levels = next_levels();
  if (!levels) return std::nullopt;
  return tree_from_levels(*levels);
}

AlphaFilteredStream trees_with_alpha(int n, int alpha) { return AlphaFilteredStream(n, alpha); }

Tree prufer_decode(int n, std::span<const int> sequence) {
  if (n < 1 || static_cast<int>(sequence.size()) != std::max(0, n - 2))
    throw BadRange("Prüfer sequence must have length n - 2");
  if (n == 1) return Tree();
  std::vector<int> degree(n, 1);
  for (int v : sequence) {
    if (v < 0 || v >= n) throw BadRange("Prüfer entry out of range");
    ++degree[v];
  }
  std::vector<Edge> edges;
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int v : sequence) {
    edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(std::min(leaf, n - 1), std::max(leaf, n - 1));
  return Tree::from_edges(n, edges);
}

LabeledTreeStream::LabeledTreeStream(int n) : n_(n), sequence_(std::max(0, n - 2), 0) {
  if (n < 1) throw BadRange("order must be positive");
  if (n > kMaxOrder) throw TooLarge("labeled-tree enumeration is limited to n <= " + std::to_string(kMaxOrder));
}

std::optional<Tree> LabeledTreeStream::next() {
  if (done_) return std::nullopt;
  Tree tree = prufer_decode(n_, sequence_);
  // Odometer increment; wraps to done after the last sequence.
  std::size_t i = 0;
  for (; i < sequence_.size(); ++i) {
    if (++sequence_[i] < n_) break;
    sequence_[i] = 0;
  }
  if (i == sequence_.size()) done_ = true;
  return tree;
}

}  // namespace msindex
