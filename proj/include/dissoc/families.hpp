#pragma once

// The two extremal tree families and the bound functions f (on Phi) and
// g (on the number of maximum sets omitting a vertex).
//
// T1(k, centers): a distinguished vertex v_o with a pendant leaf w, one
//   attached P2 and k attached P3 copies, `centers` of them joined at their
//   middle vertex and the rest at an end vertex. Order 3k+4.
// T2(j): a P3 with distinguished end vertex v_e, plus j further P3 copies
//   each joined to v_e at an end vertex. Order 3j+3.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "tree.hpp"

namespace dissoc {

enum class FamilyVariant { t1, t2 };

struct FamilySpec {
  FamilyVariant variant = FamilyVariant::t1;
  int k = 0;        // T1: attached P3 copies
  int centers = 0;  // T1: of those, joined at their middle vertex
  int j = 0;        // T2: attached P3 copies

  static FamilySpec t1(int k, int centers) { return {FamilyVariant::t1, k, centers, 0}; }
  static FamilySpec t2(int j) { return {FamilyVariant::t2, 0, 0, j}; }

  int order() const { return variant == FamilyVariant::t1 ? 3 * k + 4 : 3 * j + 3; }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline std::string to_string(const FamilySpec& s) {
  if (s.variant == FamilyVariant::t1) {
    return "T1(k=" + std::to_string(s.k) + ",centers=" + std::to_string(s.centers) + ")";
  }
  return "T2(j=" + std::to_string(s.j) + ")";
}

/// Maximum of Phi over trees with dissociation number x.
inline Count f_bound(int x) {
  if (x < 1) throw std::domain_error("f is defined for x >= 1, got " + std::to_string(x));
  if (x == 1) return 1;
  if (x % 2 == 1) return checked_add(checked_pow(3, static_cast<unsigned>((x - 1) / 2 - 1)), 1);
  return checked_add(checked_pow(3, static_cast<unsigned>(x / 2 - 1)), static_cast<Count>(x / 2 + 1));
}

/// Bound on the number of maximum sets omitting a fixed vertex. Undefined at x = 1.
inline Count g_bound(int x) {
  if (x < 2) throw std::domain_error("g is defined for x >= 2, got " + std::to_string(x));
  if (x % 2 == 1) return checked_pow(3, static_cast<unsigned>((x - 1) / 2 - 1));
  return checked_pow(3, static_cast<unsigned>(x / 2 - 1));
}

struct FamilyMember {
  Tree tree;
  Vertex distinguished;  // v_o for T1, v_e for T2; always 0
  FamilySpec spec;
};

inline FamilyMember gen_T1(int k, int centers) {
  if (k < 0 || centers < 0 || centers > k) {
    throw std::invalid_argument("T1 needs 0 <= centers <= k, got k=" + std::to_string(k) +
                                " centers=" + std::to_string(centers));
  }
  std::vector<Edge> e{{0, 1}, {2, 3}, {0, 2}};
  for (int i = 0; i < k; ++i) {
    const int a = 4 + 3 * i, b = a + 1, c = a + 2;  // path a-b-c
    e.emplace_back(a, b);
    e.emplace_back(b, c);
    e.emplace_back(0, i < centers ? b : a);
  }
  return {Tree::from_edges(3 * k + 4, std::move(e)), 0, FamilySpec::t1(k, centers)};
}

inline FamilyMember gen_T2(int j) {
  if (j < 0) throw std::invalid_argument("T2 needs j >= 0, got " + std::to_string(j));
  std::vector<Edge> e{{0, 1}, {1, 2}};
  for (int i = 0; i < j; ++i) {
    const int a = 3 + 3 * i, b = a + 1, c = a + 2;
    e.emplace_back(a, b);
    e.emplace_back(b, c);
    e.emplace_back(0, a);
  }
  return {Tree::from_edges(3 * j + 3, std::move(e)), 0, FamilySpec::t2(j)};
}

inline FamilyMember gen_family(const FamilySpec& s) {
  return s.variant == FamilyVariant::t1 ? gen_T1(s.k, s.centers) : gen_T2(s.j);
}

/// Family members of order n, one per isomorphism class.
inline std::vector<std::pair<Tree, FamilySpec>> special_members_of_order(int n) {
  std::vector<std::pair<Tree, FamilySpec>> out;
  if (n >= 4 && n % 3 == 1) {
    const int k = (n - 4) / 3;
    std::vector<CanonicalCode> seen;
    for (int c = 0; c <= k; ++c) {
      auto m = gen_T1(k, c);
      auto code = canonical_code(m.tree);
      if (std::find(seen.begin(), seen.end(), code) != seen.end()) continue;
      seen.push_back(std::move(code));
      out.emplace_back(std::move(m.tree), m.spec);
    }
  } else if (n >= 3 && n % 3 == 0) {
    auto m = gen_T2((n - 3) / 3);
    out.emplace_back(std::move(m.tree), m.spec);
  }
  return out;
}

/// The family member `t` is isomorphic to, if any.
inline std::optional<FamilySpec> is_special(const Tree& t) {
  const auto code = canonical_code(t);
  for (const auto& [member, spec] : special_members_of_order(t.order())) {
    if (canonical_code(member) == code) return spec;
  }
  return std::nullopt;
}

}  // namespace dissoc
