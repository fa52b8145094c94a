#pragma once

// Generation of free trees, one per isomorphism class, by successor steps on
// canonical level sequences (Wright, Richmond, Odlyzko and McKay, 1986), and
// of all labeled trees by Pruefer decoding as an independent cross-check.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tree.hpp"

namespace dissoc {

inline constexpr int kDefaultMaxTreeOrder = 18;

/// Preorder depth sequence of a rooted tree; levels[0] == 0.
struct LevelSequence {
  std::vector<int> levels;

  bool is_valid() const {
    if (levels.empty() || levels[0] != 0) return false;
    for (std::size_t i = 1; i < levels.size(); ++i) {
      if (levels[i] < 1 || levels[i] > levels[i - 1] + 1) return false;
    }
    return true;
  }

  /// Vertices labeled in preorder; the root is vertex 0.
  Tree to_tree() const {
    if (!is_valid()) throw std::invalid_argument("not a level sequence");
    std::vector<Edge> edges;
    std::vector<Vertex> last_at_depth(levels.size() + 1, 0);
    for (std::size_t i = 1; i < levels.size(); ++i) {
      edges.emplace_back(last_at_depth[levels[i] - 1], static_cast<Vertex>(i));
      last_at_depth[levels[i]] = static_cast<Vertex>(i);
    }
    return Tree::from_edges(static_cast<int>(levels.size()), std::move(edges));
  }

  /// True iff sibling subtrees appear in non-increasing lexicographic order,
  /// i.e. the sequence is the maximal one for its rooted tree.
  bool is_canonical() const {
    if (!is_valid()) return false;
    const auto [ok, end] = canonical_from(0);
    return ok && end == levels.size();
  }

 private:
  // Returns (canonical?, end index) for the subtree starting at `start`.
  std::pair<bool, std::size_t> canonical_from(std::size_t start) const {
    std::size_t i = start + 1;
    std::vector<int> prev;
    bool ok = true;
    while (i < levels.size() && levels[i] > levels[start]) {
      auto [child_ok, end] = canonical_from(i);
      std::vector<int> cur(levels.begin() + static_cast<std::ptrdiff_t>(i), levels.begin() + static_cast<std::ptrdiff_t>(end));
      if (!child_ok || (!prev.empty() && cur > prev)) ok = false;
      prev = std::move(cur);
      i = end;
    }
    return {ok, i};
  }
};

namespace detail {

// Next rooted tree in reverse lexicographic order of canonical level sequences.
// With p < 0 the pivot is the last vertex not at depth 1.
inline std::optional<std::vector<int>> next_rooted_tree(const std::vector<int>& pred, std::ptrdiff_t p = -1) {
  if (p < 0) {
    p = static_cast<std::ptrdiff_t>(pred.size()) - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::ptrdiff_t q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  std::vector<int> result = pred;
  for (auto i = p; i < static_cast<std::ptrdiff_t>(result.size()); ++i) result[i] = result[i - p + q];
  return result;
}

// Splits at the root's second child: (first subtree shifted up one level,
// root plus the remaining subtrees).
inline std::pair<std::vector<int>, std::vector<int>> split_tree(const std::vector<int>& layout) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  std::vector<int> left, rest{0};
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {std::move(left), std::move(rest)};
}

// Accepts the candidate if it is rooted at its (first) center and the first
// subtree does not exceed the rest; otherwise jumps to the next viable one.
inline std::vector<int> next_free_candidate(std::vector<int> candidate) {
  for (;;) {
    auto [left, rest] = split_tree(candidate);
    const int left_height = *std::max_element(left.begin(), left.end());
    const int rest_height = *std::max_element(rest.begin(), rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
      if (left.size() > rest.size()) {
        valid = false;
      } else if (left.size() == rest.size() && left > rest) {
        valid = false;
      }
    }
    if (valid) return candidate;

    const auto p = static_cast<std::ptrdiff_t>(left.size());
    auto next = next_rooted_tree(candidate, p);
    if (!next) throw std::logic_error("free tree successor ran out of rooted trees");
    if (candidate[p] > 2) {
      auto [new_left, new_rest] = split_tree(*next);
      const int h = *std::max_element(new_left.begin(), new_left.end());
      const std::size_t len = static_cast<std::size_t>(h) + 1;
      for (std::size_t i = 0; i < len; ++i) (*next)[next->size() - len + i] = static_cast<int>(i) + 1;
    }
    candidate = std::move(*next);
  }
}

}  // namespace detail

/// Stream of all free trees on n vertices, one per isomorphism class, in a
/// fixed order. Each tree is labeled in preorder of its level sequence.
class FreeTreeGenerator {
 public:
  explicit FreeTreeGenerator(int n, int max_order = kDefaultMaxTreeOrder) : n_(n) {
    if (n < 1) throw std::invalid_argument("tree order must be >= 1");
    if (n > max_order) {
      throw std::invalid_argument("tree order " + std::to_string(n) + " above generation cap " +
                                  std::to_string(max_order));
    }
    if (n == 1) {
      layout_ = std::vector<int>{0};
      return;
    }
    // the path, rooted at its center
    std::vector<int> layout;
    for (int i = 0; i <= n / 2; ++i) layout.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i) layout.push_back(i);
    layout_ = std::move(layout);
  }

  std::optional<Tree> next() {
    if (!layout_) return std::nullopt;
    if (n_ == 1) {
      current_ = LevelSequence{*layout_};
      layout_.reset();
      return current_.to_tree();
    }
    *layout_ = detail::next_free_candidate(std::move(*layout_));
    current_ = LevelSequence{*layout_};
    layout_ = detail::next_rooted_tree(*layout_);
    return current_.to_tree();
  }

  /// Level sequence of the tree most recently returned by next().
  const LevelSequence& current_levels() const noexcept { return current_; }

 private:
  int n_;
  std::optional<std::vector<int>> layout_;
  LevelSequence current_;
};

template <class Fn>
void for_each_free_tree(int n, Fn&& fn, int max_order = kDefaultMaxTreeOrder) {
  FreeTreeGenerator gen(n, max_order);
  while (auto t = gen.next()) fn(*t);
}

inline std::vector<Tree> free_trees(int n, int max_order = kDefaultMaxTreeOrder) {
  std::vector<Tree> out;
  for_each_free_tree(n, [&](const Tree& t) { out.push_back(t); }, max_order);
  return out;
}

inline constexpr int kPrueferMaxOrder = 9;

/// Decodes a Pruefer sequence (entries in 0..n-1, length n-2).
inline Tree decode_pruefer(int n, const std::vector<int>& seq) {
  if (n < 2 || seq.size() != static_cast<std::size_t>(n - 2)) throw std::invalid_argument("bad Pruefer sequence");
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : seq) {
    if (x < 0 || x >= n) throw std::invalid_argument("Pruefer entry out of range");
    ++degree[x];
  }
  std::vector<Edge> edges;
  for (int x : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  Vertex u = 0;
  while (degree[u] != 1) ++u;
  Vertex v = u + 1;
  while (degree[v] != 1) ++v;
  edges.emplace_back(u, v);
  return Tree::from_edges(n, std::move(edges));
}

/// Stream of all n^(n-2) labeled trees on n vertices.
class PrueferTreeGenerator {
 public:
  explicit PrueferTreeGenerator(int n) : n_(n), seq_(static_cast<std::size_t>(std::max(n - 2, 0)), 0) {
    if (n < 2 || n > kPrueferMaxOrder) {
      throw std::invalid_argument("Pruefer enumeration supports 2 <= n <= " + std::to_string(kPrueferMaxOrder));
    }
  }

  std::optional<Tree> next() {
    if (done_) return std::nullopt;
    Tree t = decode_pruefer(n_, seq_);
    // odometer increment
    std::size_t i = 0;
    while (i < seq_.size() && ++seq_[i] == n_) seq_[i++] = 0;
    if (i == seq_.size()) done_ = true;
    return t;
  }

 private:
  int n_;
  std::vector<int> seq_;
  bool done_ = false;
};

inline std::vector<Tree> labeled_trees_pruefer(int n) {
  std::vector<Tree> out;
  PrueferTreeGenerator gen(n);
  while (auto t = gen.next()) out.push_back(std::move(*t));
  return out;
}

}  // namespace dissoc
