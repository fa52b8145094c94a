#pragma once

// Rooted dynamic program for the dissociation number psi(T), the number
// Phi(T) of maximum dissociation sets, and the per-vertex split of Phi.
//
// Every vertex carries three states describing its role in a set F restricted
// to its subtree:
//   excluded  - v not in F
//   in_free   - v in F with no neighbour in F among its children
//   in_bonded - v in F with exactly one child in F (that child is in_free)
// Each state holds the best size reachable and the number of subtree sets of
// that size. A state is infeasible iff its count is zero.

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "checked.hpp"
#include "tree.hpp"

namespace dissoc {

enum class DpState : std::uint8_t { excluded = 0, in_free = 1, in_bonded = 2 };

inline constexpr std::array<DpState, 3> kDpStates{DpState::excluded, DpState::in_free, DpState::in_bonded};

struct StateEntry {
  int size = 0;
  Count count = 0;

  bool feasible() const noexcept { return count != 0; }
  static StateEntry infeasible() noexcept { return {}; }
  friend bool operator==(const StateEntry&, const StateEntry&) = default;
};

/// Disjoint union of two independent parts: sizes add, counts multiply.
inline StateEntry join(const StateEntry& a, const StateEntry& b) {
  if (!a.feasible() || !b.feasible()) return StateEntry::infeasible();
  return {a.size + b.size, checked_mul(a.count, b.count)};
}

/// Alternative choices: keep the larger size, sum counts on ties.
inline StateEntry best_of(const StateEntry& a, const StateEntry& b) {
  if (!a.feasible()) return b;
  if (!b.feasible()) return a;
  if (a.size != b.size) return a.size > b.size ? a : b;
  return {a.size, checked_add(a.count, b.count)};
}

struct DpTable {
  Vertex root = 0;
  std::vector<Vertex> parent;    // parent[root] == -1
  std::vector<Vertex> preorder;  // BFS order from root
  std::vector<std::array<StateEntry, 3>> states;

  const StateEntry& at(Vertex v, DpState s) const { return states[v][static_cast<std::size_t>(s)]; }

  /// Best over the three states of v: psi and Phi of the subtree rooted at v.
  StateEntry best(Vertex v) const {
    const auto& s = states[v];
    return best_of(best_of(s[0], s[1]), s[2]);
  }

  int psi() const { return best(root).size; }
  Count phi() const { return best(root).count; }
};

namespace detail {

inline void root_tree(const Tree& t, Vertex root, std::vector<Vertex>& parent, std::vector<Vertex>& order) {
  const auto n = static_cast<std::size_t>(t.order());
  parent.assign(n, -2);
  order.clear();
  order.reserve(n);
  parent[root] = -1;
  order.push_back(root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : t.neighbors(order[i])) {
      if (parent[w] == -2) {
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
}

inline void check_vertex(const Tree& t, Vertex v) {
  if (v < 0 || v >= t.order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " not in 0.." + std::to_string(t.order() - 1));
  }
}

}  // namespace detail

/// Post-order evaluation of the three-state recurrence rooted at `root`.
inline DpTable dp_rooted(const Tree& t, Vertex root) {
  detail::check_vertex(t, root);
  DpTable table;
  table.root = root;
  detail::root_tree(t, root, table.parent, table.preorder);
  table.states.assign(static_cast<std::size_t>(t.order()), {});

  for (auto it = table.preorder.rbegin(); it != table.preorder.rend(); ++it) {
    const Vertex v = *it;
    StateEntry none{0, 1};                      // every child excluded
    StateEntry one = StateEntry::infeasible();  // exactly one child in_free, rest excluded
    StateEntry any{0, 1};                       // every child in its best state
    for (Vertex c : t.neighbors(v)) {
      if (c == table.parent[v]) continue;
      const auto& cs = table.states[c];
      const auto& c_excl = cs[static_cast<std::size_t>(DpState::excluded)];
      const auto& c_free = cs[static_cast<std::size_t>(DpState::in_free)];
      one = best_of(join(one, c_excl), join(none, c_free));
      none = join(none, c_excl);
      any = join(any, table.best(c));
    }
    auto& s = table.states[v];
    s[static_cast<std::size_t>(DpState::excluded)] = any;
    s[static_cast<std::size_t>(DpState::in_free)] = join(none, StateEntry{1, 1});
    s[static_cast<std::size_t>(DpState::in_bonded)] = join(one, StateEntry{1, 1});
  }
  return table;
}

inline int dissociation_number(const Tree& t) { return dp_rooted(t, 0).psi(); }

inline Count count_max_dissoc(const Tree& t) { return dp_rooted(t, 0).phi(); }

/// Counts of maximum dissociation sets of the whole tree relative to one vertex.
struct VertexProfile {
  Count phi_in = 0;       // sets containing v
  Count phi_out = 0;      // sets omitting v
  Count phi_in_deg0 = 0;  // containing v, v isolated in the induced subgraph
  Count phi_in_deg1 = 0;  // containing v, v has one induced neighbour

  friend bool operator==(const VertexProfile&, const VertexProfile&) = default;
};

inline VertexProfile vertex_profile(const Tree& t, Vertex v) {
  const DpTable table = dp_rooted(t, v);
  const int psi = table.psi();
  auto optimal = [&](DpState s) {
    const auto& e = table.at(v, s);
    return e.feasible() && e.size == psi ? e.count : Count{0};
  };
  VertexProfile p;
  p.phi_out = optimal(DpState::excluded);
  p.phi_in_deg0 = optimal(DpState::in_free);
  p.phi_in_deg1 = optimal(DpState::in_bonded);
  p.phi_in = checked_add(p.phi_in_deg0, p.phi_in_deg1);
  return p;
}

inline std::vector<VertexProfile> all_vertex_profiles(const Tree& t) {
  std::vector<VertexProfile> out;
  out.reserve(static_cast<std::size_t>(t.order()));
  for (Vertex v = 0; v < t.order(); ++v) out.push_back(vertex_profile(t, v));
  return out;
}

/// Per-vertex restriction used by constrained searches.
enum class Membership : std::uint8_t { open, forced_in, forced_out };

/// Largest dissociation set respecting `constraint`, or -1 if none exists.
/// Size-only variant of dp_rooted; never overflows.
inline int max_size_constrained(const Tree& t, std::span<const Membership> constraint) {
  constexpr int kNone = -1;  // feasible sizes are never negative
  auto plus = [](int a, int b) { return a < 0 || b < 0 ? kNone : a + b; };
  std::vector<Vertex> parent, order;
  detail::root_tree(t, 0, parent, order);
  std::vector<std::array<int, 3>> sz(static_cast<std::size_t>(t.order()));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    int none = 0, one = kNone, any = 0;
    for (Vertex c : t.neighbors(v)) {
      if (c == parent[v]) continue;
      const auto& cs = sz[c];
      one = std::max(plus(one, cs[0]), plus(none, cs[1]));
      none = plus(none, cs[0]);
      any = plus(any, std::max({cs[0], cs[1], cs[2]}));
    }
    auto& s = sz[v];
    s[0] = any;
    s[1] = plus(none, 1);
    s[2] = plus(one, 1);
    if (constraint[v] == Membership::forced_in) s[0] = kNone;
    if (constraint[v] == Membership::forced_out) s[1] = s[2] = kNone;
  }
  return std::max({sz[0][0], sz[0][1], sz[0][2]});
}

}  // namespace dissoc
