#pragma once

// Exhaustive checks of the bound on Phi(T), the bound on the per-vertex
// omission counts, the extremal family formulas, monotonicity of f, and the
// dissociation set / 3-path vertex cover duality.
//
// Trees of each order are fanned out to worker threads by index; every worker
// fills a private partial report, and partials are merged and sorted so the
// final report does not depend on scheduling.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "dp.hpp"
#include "enumeration.hpp"
#include "families.hpp"
#include "tree.hpp"
#include "treegen.hpp"

namespace dissoc {

using Quantities = std::map<std::string, std::int64_t>;

struct Violation {
  std::string tree;       // edge-list text
  std::string assertion;  // which relation failed
  Quantities expected;
  Quantities actual;

  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation& a, const Violation& b) {
    return std::tie(a.tree, a.assertion, a.expected, a.actual) <=> std::tie(b.tree, b.assertion, b.expected, b.actual);
  }
};

struct EqualityWitness {
  std::string tree;
  int psi = 0;
  Count phi = 0;
  std::string family;

  friend bool operator==(const EqualityWitness&, const EqualityWitness&) = default;
};

/// Named observation that is neither a violation nor a tree witness.
struct Remark {
  std::string label;
  Quantities values;

  friend bool operator==(const Remark&, const Remark&) = default;
};

struct VerificationReport {
  std::string check_name;
  Quantities params;
  std::uint64_t instances_checked = 0;
  std::vector<Violation> violations;
  std::vector<EqualityWitness> equality_witnesses;
  std::vector<Remark> remarks;
  std::chrono::milliseconds elapsed{0};

  bool passed() const noexcept { return violations.empty(); }

  void merge(VerificationReport&& other) {
    instances_checked += other.instances_checked;
    std::move(other.violations.begin(), other.violations.end(), std::back_inserter(violations));
    std::move(other.equality_witnesses.begin(), other.equality_witnesses.end(), std::back_inserter(equality_witnesses));
    std::move(other.remarks.begin(), other.remarks.end(), std::back_inserter(remarks));
  }

  /// Witnesses grouped by psi, then by order, then by edge list.
  void normalize() {
    std::sort(violations.begin(), violations.end());
    std::sort(equality_witnesses.begin(), equality_witnesses.end(), [](const auto& a, const auto& b) {
      const int na = parse_edge_list(a.tree).order(), nb = parse_edge_list(b.tree).order();
      return std::tie(a.psi, na, a.tree) < std::tie(b.psi, nb, b.tree);
    });
  }
};

struct VerifyOptions {
  unsigned workers = 0;  // 0: hardware concurrency
  int max_order = kDefaultMaxTreeOrder;
  std::function<Count(int)> phi_bound = f_bound;  // replaced only to exercise failure paths
};

namespace detail {

inline std::int64_t q(Count c) { return static_cast<std::int64_t>(c); }

inline unsigned worker_count(const VerifyOptions& opt, std::size_t jobs) {
  unsigned w = opt.workers != 0 ? opt.workers : std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(w, jobs)));
}

// Runs fn(tree, partial) for every tree, worker w taking indices w, w+W, ...
template <class Fn>
VerificationReport fan_out(const std::vector<Tree>& trees, const VerifyOptions& opt, Fn fn) {
  const unsigned workers = worker_count(opt, trees.size());
  std::vector<VerificationReport> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < trees.size(); i += workers) fn(trees[i], partial[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  VerificationReport merged;
  for (auto& p : partial) merged.merge(std::move(p));
  return merged;
}

class Stopwatch {
 public:
  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void check_max_n(int max_n, int lo, int hi, const char* what) {
  if (max_n < lo || max_n > hi) {
    throw std::invalid_argument(std::string(what) + ": max_n must be in " + std::to_string(lo) + ".." +
                                std::to_string(hi) + ", got " + std::to_string(max_n));
  }
}

}  // namespace detail

/// Phi(T) <= f(psi) for every free tree up to max_n, with equality exactly on
/// the family members (T1 for odd psi, T2 for even psi).
inline VerificationReport verify_theorem(int max_n, const VerifyOptions& opt = {}) {
  detail::check_max_n(max_n, 1, opt.max_order, "verify_theorem");
  detail::Stopwatch clock;
  VerificationReport report;
  report.check_name = "theorem";
  report.params = {{"max_n", max_n}};

  for (int n = 1; n <= max_n; ++n) {
    const auto trees = free_trees(n, opt.max_order);
    report.merge(detail::fan_out(trees, opt, [&](const Tree& t, VerificationReport& out) {
      ++out.instances_checked;
      const DpTable table = dp_rooted(t, 0);
      const int psi = table.psi();
      const Count phi = table.phi();
      const Quantities actual{{"psi", psi}, {"phi", detail::q(phi)}};
      if (psi == 1) {
        if (phi != 1) out.violations.push_back({serialize_edge_list(t), "psi_one_implies_phi_one", {{"phi", 1}}, actual});
        return;
      }
      const Count bound = opt.phi_bound(psi);
      if (phi > bound) {
        out.violations.push_back({serialize_edge_list(t), "phi_at_most_f", {{"phi_max", detail::q(bound)}}, actual});
      }
      const auto family = is_special(t);
      const bool equal = phi == bound;
      if (equal && !family) {
        out.violations.push_back({serialize_edge_list(t), "equality_implies_special", {{"special", 1}}, actual});
      }
      if (family && !equal) {
        out.violations.push_back({serialize_edge_list(t), "special_implies_equality", {{"phi", detail::q(bound)}}, actual});
      }
      if (family) {
        const bool odd = psi % 2 == 1;
        if (odd != (family->variant == FamilyVariant::t1)) {
          out.violations.push_back({serialize_edge_list(t), "family_matches_parity",
                                    {{"psi_odd", family->variant == FamilyVariant::t1 ? 1 : 0}}, actual});
        }
        if (equal) out.equality_witnesses.push_back({serialize_edge_list(t), psi, phi, to_string(*family)});
      }
    }));
  }

  // Witness set versus family members, both inclusions, per order.
  std::map<int, std::set<CanonicalCode>> witnessed;
  for (const auto& w : report.equality_witnesses) {
    const Tree t = parse_edge_list(w.tree);
    witnessed[t.order()].insert(canonical_code(t));
  }
  for (int n = 1; n <= max_n; ++n) {
    std::set<CanonicalCode> expected;
    for (const auto& [member, spec] : special_members_of_order(n)) expected.insert(canonical_code(member));
    const auto& got = witnessed[n];
    for (const auto& [member, spec] : special_members_of_order(n)) {
      if (!got.contains(canonical_code(member))) {
        report.violations.push_back({serialize_edge_list(member), "family_member_is_witness", {{"witness", 1}}, {{"witness", 0}}});
      }
    }
    for (const auto& w : report.equality_witnesses) {
      const Tree t = parse_edge_list(w.tree);
      if (t.order() == n && !expected.contains(canonical_code(t))) {
        report.violations.push_back({w.tree, "witness_is_family_member", {{"member", 1}}, {{"member", 0}}});
      }
    }
  }

  report.normalize();
  report.elapsed = clock.elapsed();
  return report;
}

/// Every vertex of every free tree of order 2..max_n is omitted by at most
/// g(psi) maximum dissociation sets.
inline VerificationReport verify_phibar_bound(int max_n, const VerifyOptions& opt = {}) {
  detail::check_max_n(max_n, 2, opt.max_order, "verify_phibar_bound");
  detail::Stopwatch clock;
  VerificationReport report;
  report.check_name = "phibar";
  report.params = {{"max_n", max_n}};

  for (int n = 2; n <= max_n; ++n) {
    const auto trees = free_trees(n, opt.max_order);
    report.merge(detail::fan_out(trees, opt, [&](const Tree& t, VerificationReport& out) {
      ++out.instances_checked;
      const int psi = dissociation_number(t);
      const Count bound = g_bound(psi);
      const auto profiles = all_vertex_profiles(t);
      bool attained = false;
      for (Vertex v = 0; v < t.order(); ++v) {
        const Count omitted = profiles[v].phi_out;
        attained = attained || omitted == bound;
        if (omitted > bound) {
          out.violations.push_back({serialize_edge_list(t), "phibar_at_most_g",
                                    {{"vertex", v}, {"phibar_max", detail::q(bound)}},
                                    {{"vertex", v}, {"psi", psi}, {"phibar", detail::q(omitted)}}});
        }
      }
      if (attained) {
        out.remarks.push_back({"attains_g", {{"trees", 1}}});
      }
    }));
  }
  // fold per-tree remarks into one tally
  std::int64_t attaining = 0;
  for (const auto& r : report.remarks) attaining += r.values.at("trees");
  report.remarks = {{"attains_g", {{"trees", attaining}}}};

  report.normalize();
  report.elapsed = clock.elapsed();
  return report;
}

/// Family statistics checked with DP values against both the closed forms and
/// the bound functions, including strict uniqueness of the distinguished vertex
/// as the maximizer of the omission count.
inline VerificationReport verify_families(int max_k, int max_j) {
  if (max_k < 0 || max_j < 0) throw std::invalid_argument("verify_families: max_k and max_j must be >= 0");
  detail::Stopwatch clock;
  VerificationReport report;
  report.check_name = "families";
  report.params = {{"max_k", max_k}, {"max_j", max_j}};

  std::vector<FamilySpec> specs;
  for (int k = 0; k <= max_k; ++k) {
    for (int c = 0; c <= k; ++c) specs.push_back(FamilySpec::t1(k, c));
  }
  for (int j = 0; j <= max_j; ++j) specs.push_back(FamilySpec::t2(j));

  for (const auto& spec : specs) {
    const FamilyMember m = gen_family(spec);
    const std::string text = serialize_edge_list(m.tree);
    const bool t1 = spec.variant == FamilyVariant::t1;
    const int p = t1 ? spec.k : spec.j;  // number of attached P3 copies

    const int psi = dissociation_number(m.tree);
    const Count phi = count_max_dissoc(m.tree);
    const auto profiles = all_vertex_profiles(m.tree);
    const Count omitted = profiles[m.distinguished].phi_out;
    ++report.instances_checked;

    auto expect = [&](const char* what, std::int64_t want, std::int64_t got) {
      if (want != got) report.violations.push_back({text, what, {{"value", want}}, {{"value", got}}});
    };
    const Count pow3 = checked_pow(3, static_cast<unsigned>(p));
    expect("psi_parity", t1 ? 1 : 0, psi % 2);
    expect("psi_closed_form", t1 ? 2 * p + 3 : 2 * p + 2, psi);
    expect("phi_closed_form", detail::q(t1 ? pow3 + 1 : pow3 + static_cast<Count>(p) + 2), detail::q(phi));
    expect("phi_equals_f", detail::q(f_bound(psi)), detail::q(phi));
    expect("phibar_distinguished_closed_form", detail::q(pow3), detail::q(omitted));
    expect("phibar_distinguished_equals_g", detail::q(g_bound(psi)), detail::q(omitted));
    for (Vertex v = 0; v < m.tree.order(); ++v) {
      if (v != m.distinguished && profiles[v].phi_out >= omitted) {
        report.violations.push_back({text, "distinguished_unique_maximizer",
                                     {{"vertex", v}, {"phibar_below", detail::q(omitted)}},
                                     {{"vertex", v}, {"phibar", detail::q(profiles[v].phi_out)}}});
      }
    }
    if (phi == f_bound(psi)) report.equality_witnesses.push_back({text, psi, phi, to_string(spec)});
  }

  report.normalize();
  report.elapsed = clock.elapsed();
  return report;
}

/// f(x) < f(x+m) for 2 <= x < x+m <= max_x and m >= 2; also records the
/// adjacent pair (4, 5) where f decreases.
inline VerificationReport verify_f_monotone(int max_x) {
  if (max_x < 4) throw std::invalid_argument("verify_f_monotone: max_x must be >= 4");
  detail::Stopwatch clock;
  VerificationReport report;
  report.check_name = "fmono";
  report.params = {{"max_x", max_x}};

  for (int x = 2; x <= max_x; ++x) {
    for (int m = 2; x + m <= max_x; ++m) {
      ++report.instances_checked;
      const Count lo = f_bound(x), hi = f_bound(x + m);
      if (!(lo < hi)) {
        report.violations.push_back({"", "f_strictly_increasing_for_gap_at_least_2",
                                     {{"x", x}, {"m", m}},
                                     {{"f_x", detail::q(lo)}, {"f_x_plus_m", detail::q(hi)}}});
      }
    }
  }
  const Count f4 = f_bound(4), f5 = f_bound(5);
  report.remarks.push_back({"gap_one_counterexample", {{"x", 4}, {"f_x", detail::q(f4)}, {"x_plus_1", 5}, {"f_x_plus_1", detail::q(f5)}}});
  if (!(f5 < f4)) {
    report.violations.push_back({"", "gap_one_counterexample_exists", {{"f_5_below_f_4", 1}}, {{"f_4", detail::q(f4)}, {"f_5", detail::q(f5)}}});
  }
  report.normalize();
  report.elapsed = clock.elapsed();
  return report;
}

inline constexpr int kSubsetDualityMaxOrder = 10;

/// For every free tree up to max_n: a subset is a dissociation set iff its
/// complement meets every 3-path (all subsets, orders <= 10), and the minimum
/// 3-path vertex cover has size n - psi.
inline VerificationReport verify_duality(int max_n, const VerifyOptions& opt = {}) {
  detail::check_max_n(max_n, 1, std::min(kOracleLimit, opt.max_order), "verify_duality");
  detail::Stopwatch clock;
  VerificationReport report;
  report.check_name = "duality";
  report.params = {{"max_n", max_n}};

  for (int n = 1; n <= max_n; ++n) {
    const auto trees = free_trees(n, opt.max_order);
    report.merge(detail::fan_out(trees, opt, [&](const Tree& t, VerificationReport& out) {
      ++out.instances_checked;
      const SmallGraph g = SmallGraph::from_tree(t);
      if (n <= kSubsetDualityMaxOrder) {
        const std::uint32_t all = g.all_vertices();
        const auto paths = detail::three_path_masks(g);
        for (std::uint32_t f = 0; f <= all; ++f) {
          const bool dissociation = detail::is_dissociation_mask(g, f);
          const std::uint32_t complement = all & ~f;
          const bool cover = std::all_of(paths.begin(), paths.end(), [&](auto p) { return (p & complement) != 0; });
          if (dissociation != cover) {
            out.violations.push_back({serialize_edge_list(t), "dissociation_iff_complement_covers",
                                      {{"subset_mask", f}, {"equivalent", 1}},
                                      {{"subset_mask", f}, {"dissociation", dissociation}, {"cover", cover}}});
          }
        }
      }
      const int psi = dissociation_number(t);
      const int cover_size = min_3path_vertex_cover_size(g);
      if (cover_size != n - psi) {
        out.violations.push_back({serialize_edge_list(t), "min_cover_is_n_minus_psi",
                                  {{"cover", n - psi}}, {{"cover", cover_size}, {"psi", psi}}});
      }
    }));
  }
  report.normalize();
  report.elapsed = clock.elapsed();
  return report;
}

/// Re-runs the DP on a violation's tree and compares the recorded psi / phi.
inline bool violation_reproduces(const Violation& v) {
  if (v.tree.empty()) return true;
  const Tree t = parse_edge_list(v.tree);
  const DpTable table = dp_rooted(t, 0);
  if (auto it = v.actual.find("psi"); it != v.actual.end() && it->second != table.psi()) return false;
  if (auto it = v.actual.find("phi"); it != v.actual.end() && it->second != detail::q(table.phi())) return false;
  if (auto it = v.actual.find("phibar"); it != v.actual.end()) {
    const auto vertex = static_cast<Vertex>(v.actual.at("vertex"));
    if (it->second != detail::q(vertex_profile(t, vertex).phi_out)) return false;
  }
  return true;
}

}  // namespace dissoc
