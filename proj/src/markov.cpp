#include "valsat/markov.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>

namespace valsat::markov {

Matrix reflecting_walk_matrix(int resolution) {
  if (resolution < 1)
    throw MarkovError("M must be at least 1");
  const int size = resolution + 1;
  Matrix P = Matrix::Zero(size, size);
  P(0, 1) = 1.0;
  P(resolution, resolution - 1) = 1.0;
  for (int i = 1; i < resolution; ++i) {
    P(i, i - 1) = 0.5;
    P(i, i + 1) = 0.5;
  }
  return P;
}

bool is_row_stochastic(const Matrix &P, double tolerance) {
  if (P.rows() != P.cols())
    return false;
  if ((P.array() < 0.0).any())
    return false;
  return ((P.rowwise().sum().array() - 1.0).abs() <= tolerance).all();
}

namespace {

// BFS levels from state 0 over positive transitions; -1 when unreachable.
std::vector<int> bfs_levels(const Matrix &P, int root) {
  const auto size = static_cast<int>(P.rows());
  std::vector<int> level(static_cast<std::size_t>(size), -1);
  std::queue<int> queue;
  level[static_cast<std::size_t>(root)] = 0;
  queue.push(root);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int v = 0; v < size; ++v)
      if (P(u, v) > 0.0 && level[static_cast<std::size_t>(v)] < 0) {
        level[static_cast<std::size_t>(v)] = level[static_cast<std::size_t>(u)] + 1;
        queue.push(v);
      }
  }
  return level;
}

void require_square(const Matrix &P) {
  if (P.rows() != P.cols() || P.rows() == 0)
    throw MarkovError("transition matrix must be square and nonempty");
}

} // namespace

bool is_irreducible(const Matrix &P) {
  require_square(P);
  auto all_reached = [](const std::vector<int> &level) {
    return std::all_of(level.begin(), level.end(), [](int l) { return l >= 0; });
  };
  // Strongly connected iff state 0 reaches everything in P and in P^T.
  return all_reached(bfs_levels(P, 0)) && all_reached(bfs_levels(P.transpose(), 0));
}

RowVector stationary_distribution(const Matrix &P) {
  require_square(P);
  if (!is_irreducible(P))
    throw MarkovError("stationary solve needs an irreducible chain");
  const auto size = P.rows();
  // Columns of (P - I) give the balance equations; one of them is redundant
  // and is replaced by the normalisation sum(pi) = 1.
  Matrix system = (P - Matrix::Identity(size, size)).transpose();
  system.row(size - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(size);
  rhs(size - 1) = 1.0;
  Eigen::FullPivLU<Matrix> lu(system);
  if (lu.rank() < size)
    throw MarkovError("stationary system is singular");
  return lu.solve(rhs).transpose();
}

RowVector reflecting_walk_stationary_closed_form(int resolution) {
  if (resolution < 1)
    throw MarkovError("M must be at least 1");
  RowVector pi = RowVector::Constant(resolution + 1, 1.0 / resolution);
  pi(0) = pi(resolution) = 1.0 / (2.0 * resolution);
  return pi;
}

CyclicDecomposition period_and_classes(const Matrix &P) {
  require_square(P);
  if (!is_irreducible(P))
    throw MarkovError("cyclic decomposition needs an irreducible chain");
  const auto level = bfs_levels(P, 0);
  const auto size = static_cast<int>(P.rows());
  int period = 0;
  for (int u = 0; u < size; ++u)
    for (int v = 0; v < size; ++v)
      if (P(u, v) > 0.0)
        period = std::gcd(period, std::abs(level[static_cast<std::size_t>(u)] + 1 -
                                           level[static_cast<std::size_t>(v)]));

  if (period == 0)
    throw MarkovError("transition graph has no edges");
  CyclicDecomposition result;
  result.period = period;
  result.classes.resize(static_cast<std::size_t>(period));
  result.class_of.resize(static_cast<std::size_t>(size));
  for (int s = 0; s < size; ++s) {
    const int c = level[static_cast<std::size_t>(s)] % period;
    result.class_of[static_cast<std::size_t>(s)] = c;
    result.classes[static_cast<std::size_t>(c)].push_back(s);
  }
  return result;
}

CyclicDecomposition reflecting_walk_classes_closed_form(int resolution) {
  if (resolution < 1)
    throw MarkovError("M must be at least 1");
  CyclicDecomposition result;
  result.period = 2;
  result.classes.resize(2);
  for (int s = 0; s <= resolution; ++s) {
    result.class_of.push_back(s % 2);
    result.classes[static_cast<std::size_t>(s % 2)].push_back(s);
  }
  return result;
}

Matrix matrix_power(const Matrix &P, std::uint64_t k) {
  require_square(P);
  Matrix result = Matrix::Identity(P.rows(), P.cols());
  Matrix base = P;
  while (k > 0) {
    if (k & 1u)
      result = result * base;
    k >>= 1;
    if (k > 0)
      base = base * base;
  }
  return result;
}

std::uint64_t limit_exponent(Parity parity, std::uint64_t base) {
  const bool odd = (base % 2) == 1;
  return odd == (parity == Parity::odd) ? base : base + 1;
}

LimitCheck convergence_limits(const Matrix &P, int from_state, Parity parity,
                              std::uint64_t exponent) {
  require_square(P);
  if (from_state < 0 || from_state >= P.rows())
    throw MarkovError("state " + std::to_string(from_state) + " out of range");
  if ((exponent % 2 == 1) != (parity == Parity::odd))
    throw MarkovError("exponent parity does not match the requested parity");

  const CyclicDecomposition cyc = period_and_classes(P);
  const RowVector pi = stationary_distribution(P);
  const int d = cyc.period;
  const int start = cyc.class_of[static_cast<std::size_t>(from_state)];
  const auto shift = static_cast<int>(exponent % static_cast<std::uint64_t>(d));

  LimitCheck check;
  check.exponent = exponent;
  check.row = matrix_power(P, exponent).row(from_state);
  check.expected = RowVector::Zero(P.cols());
  for (int y = 0; y < P.cols(); ++y)
    if (cyc.class_of[static_cast<std::size_t>(y)] == (start + shift) % d)
      check.expected(y) = d * pi(y);
  check.max_error = (check.row - check.expected).cwiseAbs().maxCoeff();
  return check;
}

Matrix a3_closed_form(int k, Parity parity) {
  if (k < 1)
    throw MarkovError("closed form defined for k >= 1");
  const double half_pow = std::ldexp(1.0, k - 1); // 2^(k-1)
  const double pow_k = std::ldexp(1.0, k);        // 2^k
  const double pow_k1 = std::ldexp(1.0, k + 1);   // 2^(k+1)
  const double c = (half_pow + 1.0) / pow_k1;
  const double d = (half_pow - 1.0) / pow_k1;
  Matrix A(5, 5);
  if (parity == Parity::odd) {
    const double a = (half_pow + 1.0) / pow_k;
    const double b = (half_pow - 1.0) / pow_k;
    A << 0, a, 0, b, 0,
         c, 0, 0.5, 0, d,
         0, 0.5, 0, 0.5, 0,
         d, 0, 0.5, 0, c,
         0, b, 0, a, 0;
  } else {
    const double e = (pow_k + 1.0) / pow_k1;
    const double f = (pow_k - 1.0) / pow_k1;
    A << c, 0, 0.5, 0, d,
         0, e, 0, f, 0,
         0.25, 0, 0.5, 0, 0.25,
         0, f, 0, e, 0,
         d, 0, 0.5, 0, c;
  }
  return A;
}

} // namespace valsat::markov
