#pragma once

#include "valsat/solvers.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace valsat::bench {

class BenchError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// How the valuation grid size M follows the instance size n.
struct ResolutionRule {
  enum class Kind { fixed, n, twice_n } kind = Kind::n;
  int value = 2; // used by Kind::fixed

  int resolve(int n) const;
  std::string describe() const;
  static ResolutionRule parse(const std::string &text); // "n", "2n" or an integer
};

struct ExperimentSpec {
  Algorithm algo = Algorithm::valuation;
  std::vector<int> n_values;
  double clause_ratio = 4.0;
  ResolutionRule resolution;
  int seeds = 1;                          // cells per n
  std::uint64_t base_seed = 1;            // cell seeds are base_seed, base_seed + 1, ...
  std::optional<std::uint64_t> max_steps; // unset: the algorithm's default budget
  int restarts = 1;
  double alpha = 0.1;
  InitMode init = InitMode::half;
  bool accept_rounded = false;
  // Planted instances by default; raw uniform instances are checked with
  // the brute-force oracle and therefore need n <= 24.
  bool planted = true;
  // Wall-clock time breaks byte-identical output, so it is opt-in; the
  // wall_ms column holds 0 otherwise.
  bool record_wall_time = false;
  int jobs = 1;
  std::string output_path;
};

void validate(const ExperimentSpec &spec);

// Plain-text spec: `key = value` lines, `#` or `;` comments, `[section]`
// headers ignored. Keys: algo, n (comma separated), ratio, M (n | 2n | int),
// seeds, seed, max_steps, restarts, alpha, init, accept_rounded, planted,
// wall_time, jobs, output.
ExperimentSpec parse_spec(std::istream &in);
void apply_setting(ExperimentSpec &spec, const std::string &key, const std::string &value);

struct CellResult {
  Algorithm algo = Algorithm::valuation;
  int n = 0;
  std::size_t m = 0;
  int resolution = 0;
  std::uint64_t seed = 0;
  bool solved = false;
  std::uint64_t steps = 0;
  int restarts = 0;
  double wall_ms = 0.0;
  std::uint64_t positive_reflections = 0;
  std::uint64_t negative_reflections = 0;
  std::optional<double> final_hamming; // empty when no reference solution is known
};

// Cells are generated in (n, seed) order and returned in that order no
// matter how many workers run them.
std::vector<CellResult> run_experiment(const ExperimentSpec &spec);

inline constexpr const char *kCsvHeader =
    "algo,n,m,M,seed,solved,steps,restarts,wall_ms,pos_refl,neg_refl,final_hamming";

void write_csv(std::ostream &out, const std::vector<CellResult> &results);

struct SizeSummary {
  int n = 0;
  std::size_t cells = 0;
  std::size_t solved = 0;
  double solved_fraction = 0.0;
  std::optional<double> median_steps; // over solved cells
};

struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  double ci_low = 0.0; // 95% interval from Student's t
  double ci_high = 0.0;
  std::vector<SizeSummary> sizes;
};

std::vector<SizeSummary> summarize(const std::vector<CellResult> &results);

// Least squares of log(median solved steps) on log(n). Throws BenchError
// with fewer than three sizes that have a solved cell.
ScalingFit fit_scaling(const std::vector<CellResult> &results);

void write_report(std::ostream &out, const ScalingFit &fit);

} // namespace valsat::bench
