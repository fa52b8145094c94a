#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "dissoc/report_json.hpp"
#include "dissoc/verifier.hpp"

namespace dissoc {
namespace {

std::set<CanonicalCode> witness_codes(const VerificationReport& r, int order = -1) {
  std::set<CanonicalCode> out;
  for (const auto& w : r.equality_witnesses) {
    const Tree t = parse_edge_list(w.tree);
    if (order < 0 || t.order() == order) out.insert(canonical_code(t));
  }
  return out;
}

TEST(VerifyTheorem, UpToSix) {
  const auto r = verify_theorem(6);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.instances_checked, 14U);
  EXPECT_EQ(witness_codes(r), (std::set<CanonicalCode>{canonical_code(path_tree(3)), canonical_code(path_tree(4)),
                                                        canonical_code(path_tree(6))}));
}

TEST(VerifyTheorem, OrderSevenWitnessesAreBothT1Variants) {
  const auto r = verify_theorem(7);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(witness_codes(r, 7),
            (std::set<CanonicalCode>{canonical_code(gen_T1(1, 0).tree), canonical_code(gen_T1(1, 1).tree)}));
}

TEST(VerifyTheorem, SingleVertexOnly) {
  const auto r = verify_theorem(1);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.instances_checked, 1U);
  EXPECT_TRUE(r.equality_witnesses.empty());
}

TEST(VerifyTheorem, WitnessesMatchFamiliesUpToTwelve) {
  const auto r = verify_theorem(12);
  EXPECT_TRUE(r.passed());
  for (int n = 1; n <= 12; ++n) {
    std::set<CanonicalCode> expected;
    for (const auto& [t, spec] : special_members_of_order(n)) expected.insert(canonical_code(t));
    EXPECT_EQ(witness_codes(r, n), expected) << "n = " << n;
  }
  for (const auto& w : r.equality_witnesses) {
    const int n = parse_edge_list(w.tree).order();
    EXPECT_TRUE(n % 3 == 0 || n % 3 == 1);
    EXPECT_EQ(w.phi, f_bound(w.psi));
  }
  EXPECT_TRUE(std::is_sorted(r.equality_witnesses.begin(), r.equality_witnesses.end(),
                             [](const auto& a, const auto& b) { return a.psi < b.psi; }));
}

TEST(VerifyTheorem, RejectsBadRange) {
  EXPECT_THROW(verify_theorem(0), std::invalid_argument);
  EXPECT_THROW(verify_theorem(19), std::invalid_argument);
}

TEST(VerifyTheorem, DeterministicAcrossWorkerCounts) {
  VerifyOptions one, four;
  one.workers = 1;
  four.workers = 4;
  const auto a = to_json(verify_theorem(11, one), Timing::omit).dump();
  const auto b = to_json(verify_theorem(11, four), Timing::omit).dump();
  const auto c = to_json(verify_theorem(11, four), Timing::omit).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(b, c);
}

TEST(VerifyTheorem, ViolationsCarryReproducibleCertificates) {
  // A bound one below f must be exceeded by every family member.
  VerifyOptions opt;
  opt.phi_bound = [](int psi) { return f_bound(psi) - 1; };
  const auto r = verify_theorem(9, opt);
  ASSERT_FALSE(r.passed());
  bool saw_bound_failure = false;
  for (const auto& v : r.violations) {
    EXPECT_TRUE(violation_reproduces(v)) << v.tree;
    saw_bound_failure = saw_bound_failure || v.assertion == "phi_at_most_f";
  }
  EXPECT_TRUE(saw_bound_failure);

  Violation forged = r.violations.front();
  forged.actual["phi"] += 1;
  EXPECT_FALSE(violation_reproduces(forged));
}

TEST(VerifyPhibarBound, SmallTrees) {
  for (const auto& p : all_vertex_profiles(path_tree(3))) EXPECT_LE(p.phi_out, g_bound(2));
  const auto spider = gen_T2(2);
  const auto profiles = all_vertex_profiles(spider.tree);
  Count best = 0;
  for (const auto& p : profiles) best = std::max(best, p.phi_out);
  EXPECT_EQ(best, 9U);
  EXPECT_EQ(best, g_bound(6));
  EXPECT_EQ(std::count_if(profiles.begin(), profiles.end(), [&](const auto& p) { return p.phi_out == best; }), 1);
  EXPECT_EQ(profiles[spider.distinguished].phi_out, best);
}

TEST(VerifyPhibarBound, UpToTen) {
  const auto r = verify_phibar_bound(10);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.instances_checked, 200U);  // 201 free trees of order <= 10, minus K1
  EXPECT_THROW(verify_phibar_bound(1), std::invalid_argument);
}

TEST(VerifyFamilies, FormulasHoldAndPathMembersShareTheMaximum) {
  const auto r = verify_families(5, 5);
  EXPECT_EQ(r.instances_checked, 21U + 6U);
  // Only the uniqueness assertion fails, and only on P4 = T1(0,0), P3 = T2(0) and P6 = T2(1).
  std::set<std::pair<CanonicalCode, std::int64_t>> failures;
  for (const auto& v : r.violations) {
    EXPECT_EQ(v.assertion, "distinguished_unique_maximizer");
    EXPECT_EQ(v.actual.at("phibar"), v.expected.at("phibar_below"));
    EXPECT_TRUE(violation_reproduces(v));
    failures.emplace(canonical_code(parse_edge_list(v.tree)), v.actual.at("vertex"));
  }
  const auto p4 = canonical_code(path_tree(4)), p3 = canonical_code(path_tree(3)), p6 = canonical_code(path_tree(6));
  EXPECT_EQ(failures, (std::set<std::pair<CanonicalCode, std::int64_t>>{{p4, 2}, {p3, 1}, {p3, 2}, {p6, 3}}));
  EXPECT_TRUE(verify_families(0, 0).violations.size() == 3U);
  EXPECT_EQ(r.equality_witnesses.size(), 27U);
  EXPECT_THROW(verify_families(-1, 0), std::invalid_argument);
}

TEST(VerifyFamilies, SpotValues) {
  const auto leaf_only = gen_T1(3, 0).tree;
  EXPECT_EQ(count_max_dissoc(leaf_only), 28U);
  EXPECT_EQ(dissociation_number(leaf_only), 9);
  const auto t2 = gen_T2(3).tree;
  EXPECT_EQ(count_max_dissoc(t2), 32U);
  EXPECT_EQ(dissociation_number(t2), 8);
  const auto centered = gen_T1(2, 2).tree;
  EXPECT_EQ(count_max_dissoc(centered), 10U);
  EXPECT_EQ(dissociation_number(centered) % 2, 1);
  EXPECT_EQ(brute_force_oracle(SmallGraph::from_tree(centered)).phi, 10U);
}

TEST(VerifyFMonotone, PairsAndCounterexample) {
  EXPECT_LT(f_bound(3), f_bound(5));
  EXPECT_EQ(f_bound(3), 2U);
  EXPECT_EQ(f_bound(5), 4U);
  EXPECT_LT(f_bound(4), f_bound(7));
  EXPECT_EQ(f_bound(7), 10U);

  const auto r = verify_f_monotone(60);
  EXPECT_TRUE(r.passed());
  // x = 2..58 admits m = 2..60-x, i.e. 59 - x pairs: 57 + 56 + ... + 1
  EXPECT_EQ(r.instances_checked, 1653U);
  ASSERT_EQ(r.remarks.size(), 1U);
  EXPECT_EQ(r.remarks[0].values.at("f_x"), 6);
  EXPECT_EQ(r.remarks[0].values.at("f_x_plus_1"), 4);
  EXPECT_THROW(verify_f_monotone(3), std::invalid_argument);
}

TEST(VerifyDuality, Examples) {
  const auto p3 = SmallGraph::from_tree(path_tree(3));
  EXPECT_TRUE(is_dissociation_set(p3, VertexSet({0, 2})));
  EXPECT_TRUE(covers_all_3paths(p3, VertexSet({1})));
  const auto p6 = path_tree(6);
  EXPECT_EQ(6 - dissociation_number(p6), min_3path_vertex_cover_size(SmallGraph::from_tree(p6)));
  EXPECT_EQ(dissociation_number(Tree::single_vertex()), 1);
  EXPECT_EQ(min_3path_vertex_cover_size(SmallGraph::from_tree(Tree::single_vertex())), 0);

  const auto r = verify_duality(9);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.instances_checked, 95U);
}

TEST(ReportJson, RoundTrip) {
  const auto r = verify_theorem(8);
  const auto j = to_json(r);
  EXPECT_TRUE(j.contains("elapsed_ms"));
  EXPECT_FALSE(to_json(r, Timing::omit).contains("elapsed_ms"));
  const auto back = report_from_json(j);
  EXPECT_EQ(back.check_name, "theorem");
  EXPECT_EQ(back.params, r.params);
  EXPECT_EQ(back.instances_checked, r.instances_checked);
  EXPECT_EQ(back.equality_witnesses, r.equality_witnesses);
  EXPECT_EQ(to_json(back).dump(), j.dump());
}

TEST(ReportJson, LoadRejectsInconsistentWitness) {
  auto j = to_json(verify_theorem(6));
  j["equality_witnesses"][0]["phi"] = 5;
  EXPECT_THROW(report_from_json(j), std::runtime_error);
}

TEST(ReportJson, ViolationsSurviveRoundTrip) {
  VerifyOptions opt;
  opt.phi_bound = [](int psi) { return f_bound(psi) - 1; };
  const auto r = verify_theorem(7, opt);
  const auto back = report_from_json(to_json(r));
  ASSERT_EQ(back.violations, r.violations);
  for (const auto& v : back.violations) EXPECT_TRUE(violation_reproduces(v));
}

}  // namespace
}  // namespace dissoc
