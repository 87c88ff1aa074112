#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace valsat::markov {

class MarkovError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

using Matrix = Eigen::MatrixXd;
using RowVector = Eigen::RowVectorXd;

// Transition matrix of the per-variable walk on the grid {0, 1/M, ..., 1}:
// interior states move one level up or down with probability 1/2 each, the
// two barrier states move inward with probability 1. State i is level i/M.
Matrix reflecting_walk_matrix(int resolution);

bool is_row_stochastic(const Matrix &P, double tolerance = 1e-12);
bool is_irreducible(const Matrix &P);

// Solves pi (P - I) = 0 together with sum(pi) = 1 as one square linear
// system. Power iteration is not an option: the reflecting walk is periodic.
// Throws MarkovError for reducible or singular input.
RowVector stationary_distribution(const Matrix &P);

// Barriers 1/(2M), interior states 1/M.
RowVector reflecting_walk_stationary_closed_form(int resolution);

struct CyclicDecomposition {
  int period = 0;
  std::vector<std::vector<int>> classes; // S_0 (contains state 0), S_1, ...
  std::vector<int> class_of;             // state -> class index
};

// Period from the BFS levels of the transition graph rooted at state 0 (the
// gcd of level(u) + 1 - level(v) over all edges u -> v); classes by level
// modulo the period. Throws MarkovError for reducible input.
CyclicDecomposition period_and_classes(const Matrix &P);

// Even levels form S_0 and odd levels S_1, for every M.
CyclicDecomposition reflecting_walk_classes_closed_form(int resolution);

// P^k by repeated squaring.
Matrix matrix_power(const Matrix &P, std::uint64_t k);

enum class Parity { even, odd };

inline constexpr std::uint64_t kDefaultLimitExponent = 10'000;

// The smallest exponent >= base with the requested parity.
std::uint64_t limit_exponent(Parity parity, std::uint64_t base = kDefaultLimitExponent);

struct LimitCheck {
  std::uint64_t exponent = 0;
  RowVector row;      // row from_state of P^exponent
  RowVector expected; // d * pi(y) on the class reached at that exponent, 0 elsewhere
  double max_error = 0.0;
};

// Compares a row of a high power with the periodic-chain limit. Throws
// MarkovError when the exponent's parity differs from `parity`.
LimitCheck convergence_limits(const Matrix &P, int from_state, Parity parity,
                              std::uint64_t exponent = kDefaultLimitExponent);

// Closed forms of A^(2k-1) (odd) and A^(2k) (even) for the M = 4 walk,
// built from 2^(k-1) +- 1 over 2^k and 2^(k+1). Throws MarkovError for k < 1.
Matrix a3_closed_form(int k, Parity parity);

// Standard normal CDF, computed as erfc(-x / sqrt 2) / 2 with the C library
// erfc (glibc documents a maximum error of a few ulp, far below 1e-7).
double normal_cdf(double x);

// Limit of P(first passage through r happens within t r^2 steps) as
// r -> infinity: 2 (1 - Phi(1 / sqrt t)). Throws MarkovError for t <= 0.
double normal_first_passage_limit(double t);

struct FirstPassageEstimate {
  double probability = 0.0;
  double standard_error = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
  std::uint64_t horizon = 0; // floor(t r^2)
};

// Monte Carlo over unrestricted +-1 walks started at 0: the fraction that
// reach +r within floor(t r^2) steps. Deterministic for a fixed seed.
FirstPassageEstimate first_passage_estimate(int r, double t, std::uint64_t trials,
                                            std::uint64_t seed);

} // namespace valsat::markov
