#include "support.hpp"
#include "valsat/valuation.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace valsat;

namespace {

Literal pos(int v) { return {v, false}; }
Literal neg(int v) { return {v, true}; }

} // namespace

TEST(Valuation, VectorInvariants) {
  EXPECT_THROW(ValuationVector(0, 3), ValuationError);
  EXPECT_THROW(ValuationVector(2, 3, 3), ValuationError);
  EXPECT_THROW(ValuationVector(2, std::vector<int>{0, -1}), ValuationError);
  ValuationVector vv(4, 2, 1);
  EXPECT_THROW(vv.set_level(1, 5), ValuationError);
  EXPECT_THROW(vv.level(3), ValuationError);
  vv.set_level(2, 4);
  EXPECT_EQ(vv.value(2), 1.0);
  EXPECT_TRUE(vv.at_barrier(2));
  EXPECT_FALSE(vv.at_barrier(1));
}

TEST(Valuation, LiteralExamples) {
  ValuationVector vv(4, std::vector<int>{4, 0, 1});
  EXPECT_EQ(literal_valuation(pos(1), vv), 1.0);
  EXPECT_EQ(literal_valuation(neg(2), vv), 1.0);
  EXPECT_EQ(literal_valuation(neg(3), vv), 0.75);
  EXPECT_THROW(literal_valuation(pos(4), vv), ValuationError);
}

TEST(Valuation, ClauseExamples) {
  const Clause c{pos(1), pos(2), pos(3)};
  EXPECT_EQ(clause_valuation(c, ValuationVector(2, 3, 0)), 0.0);
  EXPECT_EQ(clause_valuation(c, ValuationVector(2, std::vector<int>{2, 1, 0})), 1.0);
  EXPECT_EQ(clause_valuation(c, ValuationVector(2, 3, 1)), 0.875);
  EXPECT_EQ(clause_valuation(Clause{}, ValuationVector(2, 3, 1)), 0.0);
}

TEST(Valuation, ExpandedPolynomialAgreement) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Clause c{pos(1), neg(2), pos(3)};
  for (int i = 0; i < 10000; ++i) {
    const std::vector<double> values{unit(gen), unit(gen), unit(gen)};
    const double a = values[0], b = 1.0 - values[1], d = values[2];
    const double v = clause_valuation(c, values);
    EXPECT_NEAR(v, oracle::or3_expanded(a, b, d), 1e-12);
    EXPECT_NEAR(v, oracle::or_folded({a, b, d}), 1e-12);
  }
}

TEST(Valuation, GridClausesMatchExpansion) {
  for (int M : {1, 2, 3, 7}) {
    for (int a = 0; a <= M; ++a)
      for (int b = 0; b <= M; ++b)
        for (int d = 0; d <= M; ++d) {
          const ValuationVector vv(M, std::vector<int>{a, b, d});
          const double expected =
              oracle::or3_expanded(double(a) / M, 1.0 - double(b) / M, double(d) / M);
          EXPECT_NEAR(clause_valuation(Clause{pos(1), neg(2), pos(3)}, vv), expected, 1e-12);
        }
  }
}

TEST(Valuation, ExpressionExamples) {
  const CnfFormula f(2, {{pos(1)}, {pos(2)}});
  EXPECT_EQ(expression_valuation(f, ValuationVector(2, 2, 2)), 1.0);
  EXPECT_EQ(expression_valuation(f, ValuationVector(2, std::vector<int>{2, 0})), 0.0);
  EXPECT_EQ(expression_valuation(f, ValuationVector(2, 2, 1)), 0.25);
  EXPECT_EQ(expression_valuation(CnfFormula(3, {}), ValuationVector(2, 3, 1)), 1.0);
  EXPECT_THROW(expression_valuation(f, ValuationVector(2, 3, 1)), ValuationError);
}

TEST(Valuation, Monotonicity) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const int M = 1 + static_cast<int>(gen() % 10);
    std::vector<int> levels(3);
    for (int &k : levels)
      k = static_cast<int>(gen() % (M + 1));
    const Clause c{pos(1), neg(2), pos(3)};
    ValuationVector vv(M, levels);
    const double base = clause_valuation(c, vv);
    if (levels[0] < M) {
      ValuationVector up = vv;
      up.set_level(1, levels[0] + 1);
      EXPECT_GE(clause_valuation(c, up), base);
    }
    if (levels[1] > 0) {
      ValuationVector down = vv;
      down.set_level(2, levels[1] - 1);
      EXPECT_GE(clause_valuation(c, down), base);
    }
  }
}

TEST(Valuation, BarrierStatesAreBoolean) {
  std::mt19937_64 gen(9);
  for (int trial = 0; trial < 500; ++trial) {
    const int M = 1 + static_cast<int>(gen() % 6);
    const auto clauses = oracle::random_3cnf(5, 4, gen);
    const CnfFormula f = support::to_formula(5, clauses);
    const auto bits = static_cast<std::uint32_t>(gen() % 32);
    std::vector<int> levels;
    for (int v = 0; v < 5; ++v)
      levels.push_back(((bits >> v) & 1u) ? M : 0);
    const ValuationVector vv(M, levels);
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      const double v = clause_valuation(f.clause(i), vv);
      EXPECT_EQ(v, oracle::satisfied_by({clauses[i]}, bits) ? 1.0 : 0.0);
    }
  }
}

TEST(Valuation, HammingExamples) {
  const ValuationVector a(1, std::vector<int>{0, 1, 1});
  const ValuationVector b(1, std::vector<int>{1, 1, 0});
  EXPECT_EQ(hamming_distance(a, a), 0.0);
  EXPECT_EQ(hamming_distance(a, b), 2.0);
  const ValuationVector c(4, std::vector<int>{0, 2});
  const ValuationVector d(4, std::vector<int>{3, 2});
  EXPECT_EQ(hamming_distance(c, d), 0.75);
  EXPECT_EQ(normalized_hamming_distance(c, d), 3);
  EXPECT_THROW(hamming_distance(a, c), ValuationError);
  EXPECT_THROW(hamming_distance(ValuationVector(2, 2), ValuationVector(4, 2)), ValuationError);
}

TEST(Valuation, HammingIsAMetric) {
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const int M = 1 + static_cast<int>(gen() % 8);
    auto draw = [&] {
      std::vector<int> levels(6);
      for (int &k : levels)
        k = static_cast<int>(gen() % (M + 1));
      return ValuationVector(M, levels);
    };
    const ValuationVector x = draw(), y = draw(), z = draw();
    EXPECT_EQ(hamming_distance(x, y), hamming_distance(y, x));
    EXPECT_EQ(hamming_distance(x, y) == 0.0, x == y);
    EXPECT_LE(normalized_hamming_distance(x, z),
              normalized_hamming_distance(x, y) + normalized_hamming_distance(y, z));
    EXPECT_LE(hamming_distance(x, z), hamming_distance(x, y) + hamming_distance(y, z) + 1e-12);
  }
}

TEST(Valuation, BooleanProjection) {
  const auto a = as_boolean_assignment(ValuationVector(2, std::vector<int>{0, 2, 2}));
  ASSERT_TRUE(a);
  EXPECT_EQ(*a, Assignment(std::vector<bool>{false, true, true}));
  EXPECT_FALSE(as_boolean_assignment(ValuationVector(2, std::vector<int>{0, 1, 2})));
  std::mt19937_64 gen(1);
  for (int i = 0; i < 100; ++i) {
    std::vector<int> levels(5);
    for (int &k : levels)
      k = static_cast<int>(gen() % 2);
    EXPECT_TRUE(as_boolean_assignment(ValuationVector(1, levels)));
  }
}

TEST(Valuation, ExactComparisonMatchesRationalOrder) {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 3000; ++trial) {
    const int M = 1 + static_cast<int>(gen() % 12);
    std::vector<int> levels(6);
    for (int &k : levels)
      k = static_cast<int>(gen() % (M + 1));
    const ValuationVector vv(M, levels);
    const auto clauses = oracle::random_3cnf(6, 2, gen);
    const CnfFormula f = support::to_formula(6, clauses);
    ASSERT_TRUE(supports_exact_comparison(f, M));
    // deficit as an exact integer product of (M - k) or k
    std::int64_t expected[2];
    for (int c = 0; c < 2; ++c) {
      expected[c] = 1;
      for (int lit : clauses[static_cast<std::size_t>(c)]) {
        const int k = levels[static_cast<std::size_t>(std::abs(lit) - 1)];
        expected[c] *= lit > 0 ? M - k : k;
      }
      EXPECT_EQ(clause_deficit(f.clause(static_cast<std::size_t>(c)), vv), expected[c]);
    }
    const int order = expected[0] > expected[1] ? -1 : expected[0] < expected[1] ? 1 : 0;
    EXPECT_EQ(compare_clause_valuations(f.clause(0), f.clause(1), vv), order);
  }
  EXPECT_FALSE(supports_exact_comparison(CnfFormula(3, {{pos(1), pos(2), pos(3)}}),
                                         kExactResolutionLimit + 1));
}

TEST(Valuation, FromAssignment) {
  Assignment a(3);
  a.set(2, true);
  const ValuationVector vv = ValuationVector::from_assignment(a, 5);
  EXPECT_EQ(vv.levels(), (std::vector<int>{0, 5, 0}));
}
