#include "valsat/bench.hpp"
#include "valsat/rng.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numeric>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

namespace valsat::bench {

int ResolutionRule::resolve(int n) const {
  switch (kind) {
  case Kind::fixed:
    return value;
  case Kind::n:
    return n;
  case Kind::twice_n:
    return 2 * n;
  }
  return value;
}

std::string ResolutionRule::describe() const {
  switch (kind) {
  case Kind::fixed:
    return std::to_string(value);
  case Kind::n:
    return "n";
  case Kind::twice_n:
    return "2n";
  }
  return "?";
}

ResolutionRule ResolutionRule::parse(const std::string &text) {
  if (text == "n")
    return {Kind::n, 0};
  if (text == "2n")
    return {Kind::twice_n, 0};
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used == text.size() && value >= 1)
      return {Kind::fixed, value};
  } catch (const std::exception &) {
  }
  throw BenchError("M rule must be 'n', '2n' or a positive integer, got '" + text + "'");
}

void validate(const ExperimentSpec &spec) {
  if (spec.n_values.empty())
    throw BenchError("experiment needs at least one n");
  if (spec.seeds < 1)
    throw BenchError("seeds per cell must be at least 1");
  if (!(spec.clause_ratio > 0.0))
    throw BenchError("clause ratio must be positive");
  if (spec.jobs < 1)
    throw BenchError("jobs must be at least 1");
  for (int n : spec.n_values) {
    if (n < 3)
      throw BenchError("n must be at least 3");
    if (!spec.planted && n > kBruteForceVarLimit)
      throw BenchError("raw random instances are verified by brute force, which needs n <= " +
                       std::to_string(kBruteForceVarLimit));
    SolverConfig cfg;
    cfg.resolution = spec.resolution.resolve(n);
    cfg.max_steps = spec.max_steps;
    cfg.restarts = spec.restarts;
    cfg.alpha = spec.alpha;
    cfg.init = spec.init;
    try {
      valsat::validate(cfg, spec.algo);
    } catch (const SolverError &e) {
      throw BenchError("n = " + std::to_string(n) + ": " + e.what());
    }
  }
}

namespace {

std::string trim(const std::string &s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos)
    return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_bool(const std::string &key, const std::string &value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on")
    return true;
  if (value == "false" || value == "0" || value == "no" || value == "off")
    return false;
  throw BenchError("'" + key + "' expects a boolean, got '" + value + "'");
}

template <typename T> T parse_number(const std::string &key, const std::string &value) {
  std::istringstream in(value);
  T result{};
  if (!(in >> result) || !(in >> std::ws).eof())
    throw BenchError("'" + key + "' expects a number, got '" + value + "'");
  return result;
}

} // namespace

void apply_setting(ExperimentSpec &spec, const std::string &key, const std::string &value) {
  try {
    if (key == "algo") {
      spec.algo = parse_algorithm(value);
    } else if (key == "n") {
      spec.n_values.clear();
      std::istringstream in(value);
      std::string item;
      while (std::getline(in, item, ','))
        spec.n_values.push_back(parse_number<int>(key, trim(item)));
    } else if (key == "ratio") {
      spec.clause_ratio = parse_number<double>(key, value);
    } else if (key == "M") {
      spec.resolution = ResolutionRule::parse(value);
    } else if (key == "seeds") {
      spec.seeds = parse_number<int>(key, value);
    } else if (key == "seed") {
      spec.base_seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "max_steps") {
      spec.max_steps = parse_number<std::uint64_t>(key, value);
    } else if (key == "restarts") {
      spec.restarts = parse_number<int>(key, value);
    } else if (key == "alpha") {
      spec.alpha = parse_number<double>(key, value);
    } else if (key == "init") {
      spec.init = parse_init_mode(value);
    } else if (key == "accept_rounded") {
      spec.accept_rounded = parse_bool(key, value);
    } else if (key == "planted") {
      spec.planted = parse_bool(key, value);
    } else if (key == "wall_time") {
      spec.record_wall_time = parse_bool(key, value);
    } else if (key == "jobs") {
      spec.jobs = parse_number<int>(key, value);
    } else if (key == "output") {
      spec.output_path = value;
    } else {
      throw BenchError("unknown setting '" + key + "'");
    }
  } catch (const SolverError &e) {
    throw BenchError(e.what());
  }
}

ExperimentSpec parse_spec(std::istream &in) {
  ExperimentSpec spec;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find_first_of("#;")));
    if (line.empty() || line.front() == '[')
      continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw BenchError("spec line " + std::to_string(lineno) + ": expected key = value");
    try {
      apply_setting(spec, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const BenchError &e) {
      throw BenchError("spec line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return spec;
}

namespace {

struct Cell {
  int n;
  std::uint64_t seed;
};

CellResult run_cell(const ExperimentSpec &spec, const Cell &cell) {
  const auto m = static_cast<std::size_t>(std::llround(spec.clause_ratio * cell.n));
  const std::uint64_t instance_seed = derive_seed(cell.seed, static_cast<std::uint64_t>(cell.n), 0);
  const std::uint64_t solver_seed = derive_seed(cell.seed, static_cast<std::uint64_t>(cell.n), 1);

  CnfFormula formula;
  std::optional<Assignment> reference;
  if (spec.planted) {
    PlantedInstance instance = generate_planted_3sat(cell.n, m, instance_seed);
    formula = std::move(instance.formula);
    reference = std::move(instance.solution);
  } else {
    formula = generate_random_3sat(cell.n, m, instance_seed);
    reference = brute_force_sat(formula);
  }

  SolverConfig cfg;
  cfg.resolution = spec.resolution.resolve(cell.n);
  cfg.max_steps = spec.max_steps;
  cfg.restarts = spec.restarts;
  cfg.alpha = spec.alpha;
  cfg.seed = solver_seed;
  cfg.init = spec.init;
  cfg.accept_rounded = spec.accept_rounded;

  const auto start = std::chrono::steady_clock::now();
  const SolverResult result = solve(spec.algo, formula, cfg, reference ? &*reference : nullptr);
  const auto stop = std::chrono::steady_clock::now();

  if (result.solved() && !satisfies(formula, *result.model))
    throw std::logic_error("benchmark cell produced an unverified model");

  CellResult cellres;
  cellres.algo = spec.algo;
  cellres.n = cell.n;
  cellres.m = m;
  cellres.resolution = spec.algo == Algorithm::valuation ? cfg.resolution : 1;
  cellres.seed = cell.seed;
  cellres.solved = result.solved();
  cellres.steps = result.steps_used;
  cellres.restarts = result.restarts_used;
  if (spec.record_wall_time)
    cellres.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  cellres.positive_reflections = result.reflections.positive;
  cellres.negative_reflections = result.reflections.negative;
  cellres.final_hamming = result.final_hamming;
  return cellres;
}

} // namespace

std::vector<CellResult> run_experiment(const ExperimentSpec &spec) {
  validate(spec);
  std::vector<Cell> cells;
  for (int n : spec.n_values)
    for (int s = 0; s < spec.seeds; ++s)
      cells.push_back({n, spec.base_seed + static_cast<std::uint64_t>(s)});

  std::vector<CellResult> results(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        results[i] = run_cell(spec, cells[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
      }
    }
  };
  const auto workers = static_cast<std::size_t>(std::min<std::size_t>(
      static_cast<std::size_t>(spec.jobs), std::max<std::size_t>(cells.size(), 1)));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
  if (failure)
    std::rethrow_exception(failure);
  return results;
}

void write_csv(std::ostream &out, const std::vector<CellResult> &results) {
  out << kCsvHeader << '\n';
  char buffer[64];
  for (const CellResult &r : results) {
    out << to_string(r.algo) << ',' << r.n << ',' << r.m << ',' << r.resolution << ',' << r.seed
        << ',' << (r.solved ? 1 : 0) << ',' << r.steps << ',' << r.restarts << ',';
    std::snprintf(buffer, sizeof buffer, "%.3f", r.wall_ms);
    out << buffer << ',' << r.positive_reflections << ',' << r.negative_reflections << ',';
    if (r.final_hamming) {
      std::snprintf(buffer, sizeof buffer, "%.6f", *r.final_hamming);
      out << buffer;
    }
    out << '\n';
  }
}

std::vector<SizeSummary> summarize(const std::vector<CellResult> &results) {
  std::map<int, std::vector<const CellResult *>> by_n;
  for (const CellResult &r : results)
    by_n[r.n].push_back(&r);
  std::vector<SizeSummary> sizes;
  for (const auto &[n, cells] : by_n) {
    SizeSummary s;
    s.n = n;
    s.cells = cells.size();
    std::vector<double> steps;
    for (const CellResult *r : cells)
      if (r->solved)
        steps.push_back(static_cast<double>(r->steps));
    s.solved = steps.size();
    s.solved_fraction = static_cast<double>(s.solved) / static_cast<double>(s.cells);
    if (!steps.empty()) {
      std::sort(steps.begin(), steps.end());
      const std::size_t mid = steps.size() / 2;
      s.median_steps = steps.size() % 2 ? steps[mid] : 0.5 * (steps[mid - 1] + steps[mid]);
    }
    sizes.push_back(s);
  }
  return sizes;
}

ScalingFit fit_scaling(const std::vector<CellResult> &results) {
  ScalingFit fit;
  fit.sizes = summarize(results);
  std::vector<double> xs, ys;
  for (const SizeSummary &s : fit.sizes)
    if (s.median_steps) {
      xs.push_back(std::log(static_cast<double>(s.n)));
      // A run solved by its initial state used 0 steps; log needs >= 1.
      ys.push_back(std::log(std::max(*s.median_steps, 1.0)));
    }
  const std::size_t k = xs.size();
  if (k < 3)
    throw BenchError("scaling fit needs at least three sizes with a solved cell, got " +
                     std::to_string(k));

  const double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(k);
  const double mean_y = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(k);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  double ssr = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ssr += e * e;
  }
  const double dof = static_cast<double>(k - 2);
  fit.slope_stderr = std::sqrt(ssr / dof / sxx);
  const boost::math::students_t dist(dof);
  const double q = boost::math::quantile(boost::math::complement(dist, 0.025));
  fit.ci_low = fit.slope - q * fit.slope_stderr;
  fit.ci_high = fit.slope + q * fit.slope_stderr;
  return fit;
}

void write_report(std::ostream &out, const ScalingFit &fit) {
  char line[160];
  out << "n,cells,solved,solved_fraction,median_steps\n";
  for (const SizeSummary &s : fit.sizes) {
    if (s.median_steps)
      std::snprintf(line, sizeof line, "%d,%zu,%zu,%.4f,%.1f\n", s.n, s.cells, s.solved,
                    s.solved_fraction, *s.median_steps);
    else
      std::snprintf(line, sizeof line, "%d,%zu,%zu,%.4f,\n", s.n, s.cells, s.solved,
                    s.solved_fraction);
    out << line;
  }
  std::snprintf(line, sizeof line,
                "log-log slope %.6f (stderr %.6f, 95%% CI [%.6f, %.6f]), intercept %.6f\n",
                fit.slope, fit.slope_stderr, fit.ci_low, fit.ci_high, fit.intercept);
  out << line;
}

} // namespace valsat::bench
