#pragma once

// Explicit maximum dissociation sets: a DP-guided enumerator for trees and an
// exhaustive subset-scan oracle for small general graphs.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "dp.hpp"
#include "tree.hpp"

namespace dissoc {

/// Largest order accepted by the subset-scan routines.
inline constexpr int kOracleLimit = 24;

/// Vertex subset kept as a sorted member list; ordered lexicographically.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  static VertexSet from_mask(std::uint32_t mask) {
    VertexSet s;
    for (; mask != 0; mask &= mask - 1) s.members_.push_back(std::countr_zero(mask));
    return s;
  }

  std::uint32_t to_mask() const {
    std::uint32_t m = 0;
    for (Vertex v : members_) {
      if (v < 0 || v >= 32) throw std::out_of_range("vertex " + std::to_string(v) + " does not fit a mask");
      m |= std::uint32_t{1} << v;
    }
    return m;
  }

  const std::vector<Vertex>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<Vertex> members_;
};

inline std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s.members()[i];
  return os << '}';
}

/// Small simple graph (cycles allowed) stored as adjacency bit masks.
class SmallGraph {
 public:
  SmallGraph(int n, const std::vector<Edge>& edges) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
    if (n < 0 || n > kOracleLimit) {
      throw std::invalid_argument("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kOracleLimit));
    }
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("edge label out of range");
      if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
      if (adj_[u] >> v & 1U) throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      adj_[u] |= std::uint32_t{1} << v;
      adj_[v] |= std::uint32_t{1} << u;
      edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
  }

  static SmallGraph from_tree(const Tree& t) { return SmallGraph(t.order(), t.edges()); }

  int order() const noexcept { return n_; }
  std::uint32_t neighbor_mask(Vertex v) const { return adj_[v]; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::uint32_t all_vertices() const { return n_ == 32 ? ~0U : (std::uint32_t{1} << n_) - 1; }

 private:
  int n_;
  std::vector<std::uint32_t> adj_;
  std::vector<Edge> edges_;
};

namespace detail {

inline bool is_dissociation_mask(const SmallGraph& g, std::uint32_t mask) {
  for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if (std::popcount(g.neighbor_mask(v) & mask) > 1) return false;
  }
  return true;
}

// Every path a-b-c (a < c) as the mask of its three vertices.
inline std::vector<std::uint32_t> three_path_masks(const SmallGraph& g) {
  std::vector<std::uint32_t> paths;
  for (Vertex b = 0; b < g.order(); ++b) {
    const std::uint32_t nb = g.neighbor_mask(b);
    for (Vertex a = 0; a < g.order(); ++a) {
      if (!(nb >> a & 1U)) continue;
      for (Vertex c = a + 1; c < g.order(); ++c) {
        if (nb >> c & 1U) paths.push_back((1U << a) | (1U << b) | (1U << c));
      }
    }
  }
  return paths;
}

inline void check_oracle_order(const SmallGraph& g) {
  if (g.order() > kOracleLimit) {
    throw std::invalid_argument("order " + std::to_string(g.order()) + " above oracle limit");
  }
}

}  // namespace detail

/// True iff every member of `s` has at most one neighbour inside `s`.
inline bool is_dissociation_set(const SmallGraph& g, const VertexSet& s) {
  for (Vertex v : s.members()) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("member " + std::to_string(v) + " not a vertex");
  }
  return detail::is_dissociation_mask(g, s.to_mask());
}

/// True iff `cover` meets every path on three vertices.
inline bool covers_all_3paths(const SmallGraph& g, const VertexSet& cover) {
  const std::uint32_t c = cover.to_mask();
  for (std::uint32_t p : detail::three_path_masks(g)) {
    if ((p & c) == 0) return false;
  }
  return true;
}

struct OracleResult {
  int psi = 0;
  Count phi = 0;
  std::vector<VertexSet> sets;  // lexicographic order
};

/// Exhaustive scan of all 2^n subsets.
inline OracleResult brute_force_oracle(const SmallGraph& g) {
  detail::check_oracle_order(g);
  const std::uint64_t total = std::uint64_t{1} << g.order();
  int best = -1;
  std::vector<std::uint32_t> maximizers;
  for (std::uint64_t m = 0; m < total; ++m) {
    const auto mask = static_cast<std::uint32_t>(m);
    const int size = std::popcount(mask);
    if (size < best) continue;
    if (!detail::is_dissociation_mask(g, mask)) continue;
    if (size > best) {
      best = size;
      maximizers.clear();
    }
    maximizers.push_back(mask);
  }
  OracleResult r;
  r.psi = best;
  r.phi = maximizers.size();
  r.sets.reserve(maximizers.size());
  for (auto m : maximizers) r.sets.push_back(VertexSet::from_mask(m));
  std::sort(r.sets.begin(), r.sets.end());
  return r;
}

/// Minimum 3-path vertex cover by exhaustive scan.
inline int min_3path_vertex_cover_size(const SmallGraph& g) {
  detail::check_oracle_order(g);
  const auto paths = detail::three_path_masks(g);
  const std::uint64_t total = std::uint64_t{1} << g.order();
  int best = g.order();
  for (std::uint64_t m = 0; m < total; ++m) {
    const auto cover = static_cast<std::uint32_t>(m);
    if (std::popcount(cover) >= best) continue;
    bool ok = true;
    for (auto p : paths) {
      if ((p & cover) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::popcount(cover);
  }
  return best;
}

struct EnumerationResult {
  std::vector<VertexSet> sets;
  bool truncated = false;  // more sets exist beyond the limit
};

/// All maximum dissociation sets of a tree in lexicographic order.
///
/// Vertices are decided in label order, inclusion first, and a branch is kept
/// only while the constrained optimum still reaches psi, so each emitted set
/// costs O(n^2) work and the output comes out already sorted.
inline EnumerationResult enumerate_max_dissoc(const Tree& t, std::optional<std::size_t> limit = std::nullopt) {
  const int n = t.order();
  const int psi = dissociation_number(t);
  // Fails with CountOverflow before any listing is attempted.
  (void)count_max_dissoc(t);

  EnumerationResult result;
  std::vector<Membership> constraint(static_cast<std::size_t>(n), Membership::open);
  std::vector<Vertex> chosen;
  bool stop = false;

  auto descend = [&](auto&& self, int v) -> void {
    if (v == n) {
      if (limit && result.sets.size() >= *limit) {
        result.truncated = true;
        stop = true;
        return;
      }
      result.sets.emplace_back(chosen);
      return;
    }
    for (Membership m : {Membership::forced_in, Membership::forced_out}) {
      constraint[v] = m;
      if (max_size_constrained(t, constraint) == psi) {
        if (m == Membership::forced_in) chosen.push_back(v);
        self(self, v + 1);
        if (m == Membership::forced_in) chosen.pop_back();
        if (stop) break;
      }
    }
    constraint[v] = Membership::open;
  };
  descend(descend, 0);
  return result;
}

}  // namespace dissoc
