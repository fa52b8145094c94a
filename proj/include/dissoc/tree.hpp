#pragma once

// Tree data model: validated construction, edge-list text I/O, centers,
// AHU canonical codes and isomorphism testing.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dissoc {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

enum class TreeErrorKind {
  malformed_line,
  label_out_of_range,
  wrong_edge_count,
  self_loop,
  duplicate_edge,
  cyclic,
  empty_tree,
};

inline const char* to_string(TreeErrorKind kind) {
  switch (kind) {
    case TreeErrorKind::malformed_line: return "malformed line";
    case TreeErrorKind::label_out_of_range: return "vertex label out of range";
    case TreeErrorKind::wrong_edge_count: return "wrong edge count";
    case TreeErrorKind::self_loop: return "self-loop";
    case TreeErrorKind::duplicate_edge: return "duplicate edge";
    case TreeErrorKind::cyclic: return "cyclic or disconnected";
    case TreeErrorKind::empty_tree: return "empty tree";
  }
  return "unknown";
}

class TreeError : public std::runtime_error {
 public:
  TreeError(TreeErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  TreeErrorKind kind() const noexcept { return kind_; }

 private:
  TreeErrorKind kind_;
};

/// Immutable labeled tree on vertices 0..n-1.
///
/// Edges are stored normalized (u < v) and sorted, so two Trees compare equal
/// exactly when they have the same labeled edge set. Adjacency lists are sorted.
class Tree {
 public:
  /// Validates and builds a tree. Throws TreeError on any violation.
  static Tree from_edges(int n, std::vector<Edge> edges) {
    if (n < 1) throw TreeError(TreeErrorKind::empty_tree, "n = " + std::to_string(n));
    if (edges.size() != static_cast<std::size_t>(n - 1)) {
      throw TreeError(TreeErrorKind::wrong_edge_count,
                      "expected " + std::to_string(n - 1) + ", got " + std::to_string(edges.size()));
    }
    for (auto& [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n) {
        throw TreeError(TreeErrorKind::label_out_of_range,
                        std::to_string(u) + " " + std::to_string(v) + " with n = " + std::to_string(n));
      }
      if (u == v) throw TreeError(TreeErrorKind::self_loop, std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
      throw TreeError(TreeErrorKind::duplicate_edge,
                      std::to_string(dup->first) + " " + std::to_string(dup->second));
    }

    // union-find: with n-1 edges, acyclic <=> connected
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (const auto& [u, v] : edges) {
      int ru = find(u), rv = find(v);
      if (ru == rv) {
        throw TreeError(TreeErrorKind::cyclic,
                        "edge " + std::to_string(u) + " " + std::to_string(v) + " closes a cycle");
      }
      parent[ru] = rv;
    }
    return Tree(n, std::move(edges));
  }

  static Tree single_vertex() { return Tree(1, {}); }

  int order() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool operator==(const Tree& other) const { return n_ == other.n_ && edges_ == other.edges_; }

  /// Applies a relabeling: vertex v becomes perm[v].
  Tree relabeled(const std::vector<Vertex>& perm) const {
    std::vector<Edge> e;
    e.reserve(edges_.size());
    for (const auto& [u, v] : edges_) e.emplace_back(perm[u], perm[v]);
    return from_edges(n_, std::move(e));
  }

 private:
  Tree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(static_cast<std::size_t>(n)) {
    for (const auto& [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Parses a non-negative decimal integer token list; false on anything else.
inline bool parse_ints(std::string_view line, std::vector<long long>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    if (line[i] < '0' || line[i] > '9') return false;
    long long value = 0;
    while (i < line.size() && line[i] >= '0' && line[i] <= '9') {
      value = value * 10 + (line[i] - '0');
      if (value > (1LL << 40)) return false;
      ++i;
    }
    if (i < line.size() && line[i] != ' ' && line[i] != '\t') return false;
    out.push_back(value);
  }
  return true;
}

}  // namespace detail

/// Parses the edge-list format: a line with n, then n-1 lines "u v".
/// Blank lines and lines starting with '#' are skipped.
inline Tree parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = detail::trim(text.substr(pos, nl - pos));
    if (!line.empty() && line.front() != '#') lines.push_back(line);
    pos = nl + 1;
  }
  if (lines.empty()) throw TreeError(TreeErrorKind::malformed_line, "missing vertex count");

  std::vector<long long> ints;
  if (!detail::parse_ints(lines[0], ints) || ints.size() != 1) {
    throw TreeError(TreeErrorKind::malformed_line, "line 1: '" + std::string(lines[0]) + "'");
  }
  if (ints[0] < 1) throw TreeError(TreeErrorKind::empty_tree, "n = 0");
  if (ints[0] > (1 << 24)) throw TreeError(TreeErrorKind::malformed_line, "vertex count too large");
  const int n = static_cast<int>(ints[0]);

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (!detail::parse_ints(lines[i], ints) || ints.size() != 2) {
      throw TreeError(TreeErrorKind::malformed_line, "'" + std::string(lines[i]) + "'");
    }
    if (ints[0] >= n || ints[1] >= n) {
      throw TreeError(TreeErrorKind::label_out_of_range,
                      "'" + std::string(lines[i]) + "' with n = " + std::to_string(n));
    }
    edges.emplace_back(static_cast<Vertex>(ints[0]), static_cast<Vertex>(ints[1]));
  }
  return Tree::from_edges(n, std::move(edges));
}

/// Edge-list text with edges sorted lexicographically; no trailing newline.
inline std::string serialize_edge_list(const Tree& t) {
  std::ostringstream out;
  out << t.order();
  for (const auto& [u, v] : t.edges()) out << '\n' << u << ' ' << v;
  return out.str();
}

/// Center(s) by repeated leaf removal: one vertex, or two adjacent ones.
inline std::vector<Vertex> centers(const Tree& t) {
  const int n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      deg[leaf] = 0;
      for (Vertex w : t.neighbors(leaf)) {
        if (deg[w] > 0 && --deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

/// Canonical code over the alphabet {'(', ')'}; equal iff the trees are isomorphic.
struct CanonicalCode {
  std::string code;

  auto operator<=>(const CanonicalCode&) const = default;
};

/// AHU encoding of `t` rooted at `root`: each vertex is "(" + sorted child codes + ")".
inline std::string rooted_code(const Tree& t, Vertex root) {
  const auto n = static_cast<std::size_t>(t.order());
  std::vector<Vertex> order;
  std::vector<Vertex> parent(n, -1);
  order.reserve(n);
  order.push_back(root);
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : t.neighbors(order[i])) {
      if (parent[w] == -1) {
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<std::string> code(n);
  std::vector<std::string> kids;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    kids.clear();
    for (Vertex w : t.neighbors(v)) {
      if (w != parent[v]) kids.push_back(std::move(code[w]));
    }
    std::sort(kids.begin(), kids.end());
    std::string& c = code[v];
    c.push_back('(');
    for (const auto& k : kids) c += k;
    c.push_back(')');
  }
  return std::move(code[root]);
}

inline CanonicalCode canonical_code(const Tree& t) {
  const auto cs = centers(t);
  std::string best = rooted_code(t, cs.front());
  if (cs.size() == 2) best = std::min(best, rooted_code(t, cs.back()));
  return CanonicalCode{std::move(best)};
}

inline bool is_isomorphic(const Tree& a, const Tree& b) {
  if (a.order() != b.order()) return false;
  return canonical_code(a) == canonical_code(b);
}

// Convenience constructors used throughout tests and the CLI.
inline Tree path_tree(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Tree::from_edges(n, std::move(e));
}

inline Tree star_tree(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Tree::from_edges(leaves + 1, std::move(e));
}

}  // namespace dissoc
