#include "valsat/markov.hpp"
#include "valsat/rng.hpp"

#include <array>
#include <bit>
#include <cmath>

namespace valsat::markov {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_first_passage_limit(double t) {
  if (!(t > 0.0))
    throw MarkovError("time ratio t must be positive");
  return 2.0 * (1.0 - normal_cdf(1.0 / std::sqrt(t)));
}

namespace {

// For each byte of step bits (bit set = +1, low bit first): the net
// displacement and the highest partial sum along the way.
struct ByteSteps {
  std::array<int, 256> total{};
  std::array<int, 256> peak{};

  ByteSteps() {
    for (int b = 0; b < 256; ++b) {
      int s = 0, best = -8;
      for (int i = 0; i < 8; ++i) {
        s += ((b >> i) & 1) ? 1 : -1;
        best = std::max(best, s);
      }
      total[static_cast<std::size_t>(b)] = s;
      peak[static_cast<std::size_t>(b)] = best;
    }
  }
};

const ByteSteps &byte_steps() {
  static const ByteSteps table;
  return table;
}

// Runs one walk for `horizon` steps; true when it reaches +r. Steps are
// consumed 64 random bits at a time; whole words are skipped while the
// barrier is out of reach, whole bytes while their peak cannot touch it.
bool walk_reaches(Rng &rng, std::int64_t r, std::uint64_t horizon) {
  const ByteSteps &table = byte_steps();
  std::int64_t position = 0;
  std::uint64_t done = 0;
  while (done < horizon) {
    std::uint64_t bits = rng.next();
    const std::uint64_t take = std::min<std::uint64_t>(64, horizon - done);
    if (position + static_cast<std::int64_t>(take) < r) {
      const std::uint64_t mask = take == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << take) - 1;
      position += 2 * std::popcount(bits & mask) - static_cast<std::int64_t>(take);
      done += take;
      continue;
    }
    std::uint64_t left = take;
    while (left > 0) {
      const auto byte = static_cast<std::size_t>(bits & 0xffu);
      if (left >= 8 && position + table.peak[byte] < r) {
        position += table.total[byte];
        bits >>= 8;
        left -= 8;
        continue;
      }
      const std::uint64_t count = std::min<std::uint64_t>(8, left);
      for (std::uint64_t i = 0; i < count; ++i) {
        position += (bits & 1u) ? 1 : -1;
        bits >>= 1;
        if (position >= r)
          return true;
      }
      left -= count;
    }
    done += take;
  }
  return false;
}

} // namespace

FirstPassageEstimate first_passage_estimate(int r, double t, std::uint64_t trials,
                                            std::uint64_t seed) {
  if (r < 1)
    throw MarkovError("barrier distance r must be at least 1");
  if (trials < 1)
    throw MarkovError("need at least one trial");
  if (!(t > 0.0))
    throw MarkovError("time ratio t must be positive");

  FirstPassageEstimate estimate;
  estimate.trials = trials;
  estimate.horizon = static_cast<std::uint64_t>(std::floor(t * r * r + 1e-9));
  Rng rng(seed);
  for (std::uint64_t i = 0; i < trials; ++i)
    estimate.hits += walk_reaches(rng, r, estimate.horizon) ? 1 : 0;
  const double p = static_cast<double>(estimate.hits) / static_cast<double>(trials);
  estimate.probability = p;
  estimate.standard_error = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  return estimate;
}

} // namespace valsat::markov
