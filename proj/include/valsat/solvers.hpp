#pragma once

#include "valsat/cnf.hpp"
#include "valsat/transform.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace valsat {

class SolverError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class Algorithm { classic, valuation, hill_climb, sparrow };

// Starting point of the valuation walk.
enum class InitMode {
  half,    // every variable at level M/2 (M must be even)
  s0,      // uniform over the even levels {0, 2, 4, ...}
  boolean, // uniform over {0, M}
};

std::string_view to_string(Algorithm algo);
std::string_view to_string(InitMode mode);
Algorithm parse_algorithm(std::string_view name);
InitMode parse_init_mode(std::string_view name);

struct SolverConfig {
  int resolution = 2; // M, the valuation grid size
  // Moves (flips, level changes or variable updates) per try. Unset means
  // the algorithm's default: 3n classic, 4 n^2 M^2 valuation walk, 2 m^2
  // Sparrow (m counted on the clustered formula), 100 n hill climbing
  // (n counted on the clustered formula).
  std::optional<std::uint64_t> max_steps;
  int restarts = 1; // number of tries, each with a fresh initial state
  double alpha = 0.1;
  std::uint64_t seed = 1;
  InitMode init = InitMode::half;
  // Beyond the plain valuation walk: also accept when the rounded
  // valuation (level >= M/2 is true) satisfies the formula.
  bool accept_rounded = false;
  // Assert grid bounds, distance bookkeeping and hill-climb monotonicity
  // on every move; violations throw std::logic_error.
  bool check_invariants = false;
  bool record_trace = false;
};

// Throws SolverError on an invalid combination.
void validate(const SolverConfig &cfg, Algorithm algo);

// Default per-try budget for an algorithm. num_vars and num_clauses refer
// to the formula the algorithm walks on.
std::uint64_t default_step_budget(Algorithm algo, int num_vars, std::size_t num_clauses,
                                  int resolution);

enum class Outcome { sat, exhausted };

// Barrier moves classified against a reference solution. A positive
// reflection moves the variable toward its reference value, a negative one
// away from it; all other moves are interior steps.
struct ReflectionStats {
  std::uint64_t positive = 0;
  std::uint64_t negative = 0;
  std::uint64_t interior = 0;

  friend bool operator==(const ReflectionStats &, const ReflectionStats &) = default;
};

inline constexpr std::size_t kNoClause = std::numeric_limits<std::size_t>::max();

struct TraceStep {
  std::size_t clause = kNoClause;
  int var = 0;
  int direction = 0; // +1 toward true / higher level, -1 toward false

  friend bool operator==(const TraceStep &, const TraceStep &) = default;
};

struct SolverResult {
  Outcome outcome = Outcome::exhausted;
  std::optional<Assignment> model; // satisfies the input formula
  std::uint64_t steps_used = 0;
  int restarts_used = 0; // tries started
  ReflectionStats reflections;
  std::vector<TraceStep> trace;
  // Distance from the final state to the reference solution, in valuation
  // units (sum of |v - v*|); set only when a reference was supplied.
  std::optional<double> final_hamming;

  bool solved() const { return outcome == Outcome::sat; }
  friend bool operator==(const SolverResult &, const SolverResult &) = default;
};

// The optional reference is a known solution of the input formula; it is
// used only to label reflections and measure the final distance.

SolverResult schoening_classic(const CnfFormula &formula, const SolverConfig &cfg,
                               const Assignment *reference = nullptr);

SolverResult valuation_walk(const CnfFormula &formula, const SolverConfig &cfg,
                            const Assignment *reference = nullptr);

// Called after every accepted variable update with the updated variable
// and the full valuation vector (index var - 1).
using HillClimbObserver = std::function<void(int var, std::span<const double> values)>;

SolverResult hill_climb(const ClusteredFormula &cf, const SolverConfig &cfg,
                        const Assignment *reference = nullptr,
                        const HillClimbObserver &observer = {});

SolverResult clustered_sparrow(const ClusteredFormula &cf, const SolverConfig &cfg,
                               const Assignment *reference = nullptr);

// Runs any algorithm on an input formula, clustering it first when needed.
SolverResult solve(Algorithm algo, const CnfFormula &formula, const SolverConfig &cfg,
                   const Assignment *reference = nullptr);

// ---- building blocks ----

struct CubicMaximum {
  double x = 0.0;
  double value = 0.0;
};

// Maximum of c0 + c1 x + c2 x^2 + c3 x^3 over [0, 1]. Candidates are the
// endpoints and the real stationary points inside (0, 1); ties go to the
// smaller x.
CubicMaximum maximize_cubic_on_unit_interval(double c0, double c1, double c2, double c3);

enum class FlipKind { negative, null, positive };

FlipKind classify_flip(int delta);

// Total probability mass given to the negative, null and positive flip
// classes (in that order) for the given class sizes. Empty classes get 0.
std::array<double, 3> flip_class_masses(std::size_t negative, std::size_t null,
                                        std::size_t positive, double alpha);

// Make minus break of flipping var under a: clauses containing var that
// turn satisfied minus those that turn unsatisfied.
int make_minus_break(const CnfFormula &formula, std::span<const std::size_t> clauses_of_var,
                     const Assignment &a, int var);

// One row of the exhaustive flip table for the cluster pattern
// (x | a | b) & (x | -g) & (-x | t), or (-x | a | b) & ... when the
// primary literal is negated. Bits: x, a, b, g, t from bit 0 upward.
struct ClusterFlipRow {
  unsigned bits = 0;
  bool cluster_satisfied = false;
  bool primary_satisfied = false;
  int delta = 0; // make - break of flipping x
};

std::vector<ClusterFlipRow> enumerate_cluster_flips(bool primary_negated);

} // namespace valsat
