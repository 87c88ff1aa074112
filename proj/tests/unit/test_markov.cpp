#include "oracles.hpp"
#include "valsat/markov.hpp"

#include <boost/math/distributions/normal.hpp>
#include <gtest/gtest.h>

using namespace valsat::markov;

namespace {

Matrix to_matrix(const oracle::Dense &d) {
  Matrix m(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = d[i][j];
  return m;
}

double max_abs(const Matrix &a) { return a.cwiseAbs().maxCoeff(); }

} // namespace

TEST(Walk, MatrixExamples) {
  Matrix m1(2, 2);
  m1 << 0, 1, 1, 0;
  EXPECT_EQ(reflecting_walk_matrix(1), m1);
  Matrix m2(3, 3);
  m2 << 0, 1, 0, 0.5, 0, 0.5, 0, 1, 0;
  EXPECT_EQ(reflecting_walk_matrix(2), m2);
  Matrix m4(5, 5);
  m4 << 0, 1, 0, 0, 0, 0.5, 0, 0.5, 0, 0, 0, 0.5, 0, 0.5, 0, 0, 0, 0.5, 0, 0.5, 0, 0, 0, 1, 0;
  EXPECT_EQ(reflecting_walk_matrix(4), m4);
  EXPECT_THROW(reflecting_walk_matrix(0), MarkovError);
}

TEST(Walk, StructureMatchesDefinition) {
  for (int M = 1; M <= 40; ++M) {
    const Matrix P = reflecting_walk_matrix(M);
    EXPECT_EQ(P, to_matrix(oracle::walk(M)));
    EXPECT_TRUE(is_row_stochastic(P));
    EXPECT_TRUE(is_irreducible(P));
    EXPECT_EQ(P.diagonal().cwiseAbs().sum(), 0.0);
  }
}

TEST(Stationary, Examples) {
  const RowVector p1 = stationary_distribution(reflecting_walk_matrix(1));
  EXPECT_NEAR(p1(0), 0.5, 1e-12);
  EXPECT_NEAR(p1(1), 0.5, 1e-12);
  const RowVector p2 = stationary_distribution(reflecting_walk_matrix(2));
  EXPECT_NEAR(p2(0), 0.25, 1e-12);
  EXPECT_NEAR(p2(1), 0.5, 1e-12);
  EXPECT_NEAR(p2(2), 0.25, 1e-12);
  const RowVector p8 = stationary_distribution(reflecting_walk_matrix(8));
  EXPECT_NEAR(p8(0), 1.0 / 16, 1e-12);
  EXPECT_NEAR(p8(8), 1.0 / 16, 1e-12);
  for (int i = 1; i < 8; ++i)
    EXPECT_NEAR(p8(i), 1.0 / 8, 1e-12);
}

TEST(Stationary, MatchesClosedFormAndIsInvariant) {
  for (int M = 1; M <= 64; ++M) {
    const Matrix P = reflecting_walk_matrix(M);
    const RowVector pi = stationary_distribution(P);
    EXPECT_LE((pi - reflecting_walk_stationary_closed_form(M)).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LE((pi * P - pi).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_NEAR(pi.sum(), 1.0, 1e-12);
    EXPECT_GE(pi.minCoeff(), 0.0);
  }
}

TEST(Stationary, GeneralChain) {
  Matrix P(3, 3);
  P << 0.5, 0.5, 0, 0.25, 0.5, 0.25, 0, 0.5, 0.5;
  const RowVector pi = stationary_distribution(P);
  EXPECT_LE((pi * P - pi).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(pi(0), 0.25, 1e-12);
  EXPECT_NEAR(pi(1), 0.5, 1e-12);
}

TEST(Stationary, RejectsReducibleChain) {
  Matrix P(2, 2);
  P << 1, 0, 0, 1;
  EXPECT_FALSE(is_irreducible(P));
  EXPECT_THROW(stationary_distribution(P), MarkovError);
  EXPECT_THROW(period_and_classes(P), MarkovError);
}

TEST(Period, Examples) {
  const CyclicDecomposition m2 = period_and_classes(reflecting_walk_matrix(2));
  EXPECT_EQ(m2.period, 2);
  EXPECT_EQ(m2.classes[0], (std::vector<int>{0, 2}));
  EXPECT_EQ(m2.classes[1], (std::vector<int>{1}));
  const CyclicDecomposition m4 = period_and_classes(reflecting_walk_matrix(4));
  EXPECT_EQ(m4.classes[0], (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(m4.classes[1], (std::vector<int>{1, 3}));
  const CyclicDecomposition m3 = period_and_classes(reflecting_walk_matrix(3));
  EXPECT_EQ(m3.classes[0], (std::vector<int>{0, 2}));
  EXPECT_EQ(m3.classes[1], (std::vector<int>{1, 3}));
}

TEST(Period, AllWalksHavePeriodTwo) {
  for (int M = 1; M <= 32; ++M) {
    const Matrix P = reflecting_walk_matrix(M);
    const CyclicDecomposition c = period_and_classes(P);
    EXPECT_EQ(c.period, 2);
    EXPECT_EQ(c.classes, reflecting_walk_classes_closed_form(M).classes);
    // every positive transition moves to the next class
    for (int u = 0; u <= M; ++u)
      for (int v = 0; v <= M; ++v)
        if (P(u, v) > 0) {
          EXPECT_EQ(c.class_of[static_cast<std::size_t>(v)],
                    (c.class_of[static_cast<std::size_t>(u)] + 1) % 2);
        }
  }
}

TEST(Period, AperiodicAndThreeCycle) {
  Matrix lazy(2, 2);
  lazy << 0.5, 0.5, 0.5, 0.5;
  EXPECT_EQ(period_and_classes(lazy).period, 1);
  Matrix cycle(3, 3);
  cycle << 0, 1, 0, 0, 0, 1, 1, 0, 0;
  const CyclicDecomposition c = period_and_classes(cycle);
  EXPECT_EQ(c.period, 3);
  EXPECT_EQ(c.classes.size(), 3u);
}

TEST(Power, WorkedExamples) {
  const Matrix A1 = reflecting_walk_matrix(1);
  EXPECT_EQ(matrix_power(A1, 2), Matrix::Identity(2, 2));
  const Matrix A2 = reflecting_walk_matrix(2);
  EXPECT_LE(max_abs(matrix_power(A2, 3) - A2), 1e-12);
  Matrix sq(3, 3);
  sq << 0.5, 0, 0.5, 0, 1, 0, 0.5, 0, 0.5;
  EXPECT_LE(max_abs(matrix_power(A2, 2) - sq), 1e-12);
  EXPECT_EQ(matrix_power(A2, 0), Matrix::Identity(3, 3));
}

TEST(Power, MatchesStepwiseProduct) {
  for (int M : {1, 2, 3, 5, 8})
    for (int k : {1, 2, 3, 7, 16, 33}) {
      const Matrix expected = to_matrix(oracle::power_by_steps(oracle::walk(M), k));
      const Matrix got = matrix_power(reflecting_walk_matrix(M), static_cast<std::uint64_t>(k));
      EXPECT_LE(max_abs(got - expected), 1e-12);
      EXPECT_TRUE(is_row_stochastic(got, 1e-12));
    }
}

TEST(Limits, Examples) {
  const LimitCheck m2 = convergence_limits(reflecting_walk_matrix(2), 0, Parity::even);
  EXPECT_NEAR(m2.row(0), 0.5, 1e-8);
  EXPECT_NEAR(m2.row(1), 0.0, 1e-8);
  EXPECT_NEAR(m2.row(2), 0.5, 1e-8);

  for (int M : {4, 8}) {
    const LimitCheck c = convergence_limits(reflecting_walk_matrix(M), 0, Parity::even);
    EXPECT_NEAR(c.row(0), 1.0 / M, 1e-8);
    EXPECT_NEAR(c.row(M), 1.0 / M, 1e-8);
    for (int y = 2; y < M; y += 2)
      EXPECT_NEAR(c.row(y), 2.0 / M, 1e-8);
    for (int y = 1; y < M; y += 2)
      EXPECT_EQ(c.row(y), 0.0);
  }
  for (int M : {3, 5}) {
    const LimitCheck c =
        convergence_limits(reflecting_walk_matrix(M), 0, Parity::odd, limit_exponent(Parity::odd));
    EXPECT_NEAR(c.row(M), 1.0 / M, 1e-8);
    for (int y = 1; y < M; y += 2)
      EXPECT_NEAR(c.row(y), 2.0 / M, 1e-8);
  }
}

TEST(Limits, AllRowsBothParities) {
  for (int M : {2, 3, 4, 8})
    for (Parity parity : {Parity::even, Parity::odd})
      for (int from = 0; from <= M; ++from) {
        const LimitCheck c = convergence_limits(reflecting_walk_matrix(M), from, parity,
                                                limit_exponent(parity));
        EXPECT_LE(c.max_error, 1e-8);
        EXPECT_NEAR(c.expected.sum(), 1.0, 1e-12);
      }
}

TEST(Limits, ParityMismatchThrows) {
  EXPECT_THROW(convergence_limits(reflecting_walk_matrix(3), 0, Parity::odd, 10000), MarkovError);
  EXPECT_EQ(limit_exponent(Parity::even, 10000), 10000u);
  EXPECT_EQ(limit_exponent(Parity::odd, 10000), 10001u);
}

TEST(A3, FirstOddPowerIsTheWalk) {
  EXPECT_LE(max_abs(a3_closed_form(1, Parity::odd) - reflecting_walk_matrix(4)), 0.0);
  EXPECT_THROW(a3_closed_form(0, Parity::odd), MarkovError);
}

TEST(A3, MatchesStepwisePowers) {
  const oracle::Dense A = oracle::walk(4);
  for (int k = 1; k <= 20; ++k) {
    const Matrix odd = to_matrix(oracle::power_by_steps(A, 2 * k - 1));
    const Matrix even = to_matrix(oracle::power_by_steps(A, 2 * k));
    EXPECT_LE(max_abs(a3_closed_form(k, Parity::odd) - odd), 1e-12) << "k " << k;
    EXPECT_LE(max_abs(a3_closed_form(k, Parity::even) - even), 1e-12) << "k " << k;
  }
}

TEST(A3, CenterRow) {
  const Matrix odd = a3_closed_form(10, Parity::odd);
  RowVector center(5);
  center << 0, 0.5, 0, 0.5, 0;
  EXPECT_EQ(odd.row(2), center);
  const Matrix power = matrix_power(reflecting_walk_matrix(4), 19);
  EXPECT_LE((power.row(2) - center).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Normal, CdfAgainstBoost) {
  const boost::math::normal_distribution<double> standard;
  for (double x = -8.0; x <= 8.0; x += 0.01)
    EXPECT_NEAR(normal_cdf(x), boost::math::cdf(standard, x), 1e-15);
}

TEST(Normal, FirstPassageLimitExamples) {
  EXPECT_NEAR(normal_first_passage_limit(1e12), 1.0, 1e-5);
  EXPECT_NEAR(normal_first_passage_limit(1.0), 0.3173105078629141, 1e-12);
  EXPECT_NEAR(normal_first_passage_limit(0.25), 0.04550026389635842, 1e-12);
  EXPECT_THROW(normal_first_passage_limit(0.0), MarkovError);
}

TEST(FirstPassage, MatchesExactSmallBarrier) {
  // reflection-principle probability for r = 6, N = floor(t r^2)
  for (double t : {0.5, 1.0, 2.0}) {
    const FirstPassageEstimate e = first_passage_estimate(6, t, 200000, 5);
    const double exact = oracle::first_passage_exact(6, e.horizon);
    EXPECT_NEAR(e.probability, exact, 4.0 * std::sqrt(exact * (1 - exact) / 200000)) << t;
  }
}

TEST(FirstPassage, LongHorizonAndAcceleratedPath) {
  // horizons longer than a word and barriers far away exercise every skip path
  for (int r : {1, 7, 64, 65, 130}) {
    const FirstPassageEstimate e = first_passage_estimate(r, 1.0, 20000, 9);
    const double exact = oracle::first_passage_exact(r, e.horizon);
    EXPECT_NEAR(e.probability, exact, 4.5 * std::sqrt(exact * (1 - exact) / 20000)) << r;
  }
  const FirstPassageEstimate e = first_passage_estimate(10, 400.0, 2000, 1);
  EXPECT_GT(e.probability, 0.95);
}

TEST(FirstPassage, Deterministic) {
  const FirstPassageEstimate a = first_passage_estimate(20, 1.0, 5000, 3);
  const FirstPassageEstimate b = first_passage_estimate(20, 1.0, 5000, 3);
  EXPECT_EQ(a.hits, b.hits);
  EXPECT_EQ(a.horizon, 400u);
  EXPECT_THROW(first_passage_estimate(0, 1.0, 10, 1), MarkovError);
  EXPECT_THROW(first_passage_estimate(5, 1.0, 0, 1), MarkovError);
}
