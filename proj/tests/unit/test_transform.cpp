#include "support.hpp"
#include "valsat/transform.hpp"

#include <gtest/gtest.h>

#include <map>
#include <sstream>

using namespace valsat;

namespace {

void expect_occurrence_pattern(const ClusteredFormula &cf) {
  const CnfFormula &f = cf.formula();
  std::vector<int> positive(static_cast<std::size_t>(f.num_vars()) + 1),
      negative(static_cast<std::size_t>(f.num_vars()) + 1);
  for (const Clause &c : f.clauses())
    for (Literal l : c)
      ++(l.negated ? negative : positive)[static_cast<std::size_t>(l.var)];
  for (int orig = 1; orig <= cf.num_original_vars(); ++orig) {
    const auto &occ = cf.occurrences(orig);
    for (int x : occ) {
      const int p = positive[static_cast<std::size_t>(x)];
      const int n = negative[static_cast<std::size_t>(x)];
      if (occ.size() >= 2)
        EXPECT_TRUE((p == 2 && n == 1) || (p == 1 && n == 2)) << "occurrence " << x;
      else
        EXPECT_EQ(p + n, 1);
      EXPECT_LE(cf.cluster(x).size(), 3u);
    }
  }
}

} // namespace

TEST(Transform, SingleOccurrencesUnchanged) {
  const CnfFormula f = support::to_formula(3, {{1, -2, 3}});
  const ClusteredFormula cf = cluster_expression(f);
  EXPECT_EQ(cf.formula(), f);
  EXPECT_EQ(cf.num_primary_clauses(), 1u);
}

TEST(Transform, TwoOccurrencesGetEqualityPair) {
  const CnfFormula f = support::to_formula(5, {{1, 2, 3}, {-1, 4, 5}});
  const ClusteredFormula cf = cluster_expression(f);
  // occurrences numbered in order of appearance: x1 -> 1 and 4
  EXPECT_EQ(cf.occurrences(1), (std::vector<int>{1, 4}));
  const auto clauses = support::to_clauses(cf.formula());
  ASSERT_EQ(clauses.size(), 4u);
  EXPECT_EQ(clauses[0], (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(clauses[1], (std::vector<int>{-4, 5, 6}));
  EXPECT_EQ(clauses[2], (std::vector<int>{1, -4}));
  EXPECT_EQ(clauses[3], (std::vector<int>{4, -1}));
  EXPECT_EQ(cf.cluster(1).size(), 3u);
  EXPECT_EQ(cf.cluster(4).size(), 3u);
  EXPECT_TRUE(cf.cluster(1)[0].primary);
  EXPECT_FALSE(cf.cluster(1)[1].primary);
  EXPECT_TRUE(cf.is_chain_clause(2));
  EXPECT_FALSE(cf.is_chain_clause(1));
  expect_occurrence_pattern(cf);
}

TEST(Transform, CyclicChainForThreeOccurrences) {
  const CnfFormula f = support::to_formula(4, {{1, 2, 3}, {1, -2, 4}, {-1, 3, 4}});
  const ClusteredFormula cf = cluster_expression(f);
  const auto &occ = cf.occurrences(1);
  ASSERT_EQ(occ.size(), 3u);
  const auto clauses = support::to_clauses(cf.formula());
  std::vector<std::vector<int>> chain;
  for (std::size_t i = cf.num_primary_clauses(); i < clauses.size(); ++i)
    if (cf.origin_var(std::abs(clauses[i][0])) == 1)
      chain.push_back(clauses[i]);
  EXPECT_EQ(chain, (std::vector<std::vector<int>>{
                       {occ[0], -occ[1]}, {occ[1], -occ[2]}, {occ[2], -occ[0]}}));
}

TEST(Transform, SizeBoundAndOrigins) {
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 8;
    const int m = 1 + trial % 15;
    const auto clauses = oracle::random_3cnf(n, m, gen);
    const ClusteredFormula cf = cluster_expression(support::to_formula(n, clauses));
    std::map<int, int> occurrences;
    for (const auto &c : clauses)
      for (int l : c)
        ++occurrences[std::abs(l)];
    std::size_t chain = 0;
    for (const auto &[v, count] : occurrences) {
      EXPECT_EQ(cf.occurrences(v).size(), static_cast<std::size_t>(count));
      for (int x : cf.occurrences(v))
        EXPECT_EQ(cf.origin_var(x), v);
      chain += count >= 2 ? static_cast<std::size_t>(count) : 0;
    }
    EXPECT_EQ(cf.formula().num_vars(), 3 * m);
    EXPECT_EQ(cf.formula().num_clauses(), static_cast<std::size_t>(m) + chain);
    expect_occurrence_pattern(cf);
  }
}

TEST(Transform, RejectsNonThreeLiteralClauses) {
  EXPECT_THROW(cluster_expression(support::to_formula(2, {{1, 2}})), TransformError);
}

TEST(Transform, EquisatisfiableSmall) {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + trial % 2;
    const int m = 1 + trial % 6;
    const auto clauses = oracle::random_3cnf(n, m, gen);
    const ClusteredFormula cf = cluster_expression(support::to_formula(n, clauses));
    ASSERT_LE(cf.formula().num_vars(), 18);
    const bool sat_e = oracle::first_model(n, clauses).has_value();
    const bool sat_star =
        oracle::first_model(cf.formula().num_vars(), support::to_clauses(cf.formula()))
            .has_value();
    EXPECT_EQ(sat_e, sat_star);
  }
}

TEST(Transform, ProjectAndLift) {
  std::mt19937_64 gen(29);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + trial % 5;
    const auto clauses = oracle::random_3cnf(n, 6, gen);
    const CnfFormula f = support::to_formula(n, clauses);
    const ClusteredFormula cf = cluster_expression(f);
    Assignment a(n);
    for (int v = 1; v <= n; ++v)
      a.set(v, gen() & 1u);
    const Assignment lifted = lift_assignment(cf, a);
    for (std::size_t i = cf.num_primary_clauses(); i < cf.formula().num_clauses(); ++i)
      EXPECT_TRUE(clause_satisfied(cf.formula().clause(i), lifted));
    const Assignment back = project_assignment(cf, lifted);
    for (int v = 1; v <= n; ++v)
      if (!cf.occurrences(v).empty()) {
        EXPECT_EQ(back[v], a[v]);
      }
    EXPECT_EQ(satisfies(f, a), satisfies(cf.formula(), lifted));
  }
}

TEST(Transform, ProjectRejectsChainViolation) {
  const ClusteredFormula cf =
      cluster_expression(support::to_formula(5, {{1, 2, 3}, {-1, 4, 5}}));
  Assignment a(cf.formula().num_vars());
  a.set(1, true); // occurrences 1 and 4 of x1 disagree
  EXPECT_THROW(project_assignment(cf, a), TransformError);
  Assignment all_true(cf.formula().num_vars(), true);
  EXPECT_TRUE(project_assignment(cf, all_true)[1]);
}

TEST(Transform, EmptyFormula) {
  const ClusteredFormula cf = cluster_expression(CnfFormula(0, {}));
  EXPECT_EQ(lift_assignment(cf, Assignment(0)).size(), 0);
}

TEST(Transform, OccurrenceMapFile) {
  const ClusteredFormula cf =
      cluster_expression(support::to_formula(5, {{1, 2, 3}, {-1, 4, 5}}));
  std::ostringstream out;
  write_occurrence_map(out, cf);
  EXPECT_EQ(out.str(), "1 1\n2 2\n3 3\n4 1\n5 4\n6 5\n");
}
