#include "valsat/solvers.hpp"

#include <algorithm>
#include <cmath>

namespace valsat {

CubicMaximum maximize_cubic_on_unit_interval(double c0, double c1, double c2, double c3) {
  auto f = [&](double x) { return c0 + x * (c1 + x * (c2 + x * c3)); };

  // Stationary points: roots of 3 c3 x^2 + 2 c2 x + c1.
  std::vector<double> candidates{0.0, 1.0};
  const double a = 3.0 * c3, b = 2.0 * c2, c = c1;
  if (a != 0.0) {
    const double disc = b * b - 4.0 * a * c;
    if (disc >= 0.0) {
      // Numerically stable pair of roots.
      const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
      if (q != 0.0) {
        candidates.push_back(q / a);
        candidates.push_back(c / q);
      } else {
        candidates.push_back(0.0);
      }
    }
  } else if (b != 0.0) {
    candidates.push_back(-c / b);
  }

  std::sort(candidates.begin(), candidates.end());
  CubicMaximum best{0.0, f(0.0)};
  for (double x : candidates) {
    if (!(x > 0.0 && x <= 1.0))
      continue;
    const double value = f(x);
    if (value > best.value)
      best = {x, value};
  }
  return best;
}

} // namespace valsat
