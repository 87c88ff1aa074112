#include "valsat/cli.hpp"

#include "valsat/bench.hpp"
#include "valsat/dimacs.hpp"
#include "valsat/markov.hpp"
#include "valsat/rng.hpp"
#include "valsat/solvers.hpp"
#include "valsat/transform.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace valsat {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Streams {
  std::istream &in;
  std::ostream &out;
  std::ostream &err;
};

DimacsFile load_formula(const std::string &path, std::istream &in) {
  if (path.empty() || path == "-")
    return parse_dimacs(in);
  return read_dimacs_file(path);
}

// Reads a model in v-line form (as written by `generate --solution`).
Assignment read_model_file(const std::string &path, int num_vars) {
  std::ifstream file(path);
  if (!file)
    throw UsageError("cannot open model file " + path);
  Assignment model(num_vars);
  std::string line;
  while (std::getline(file, line)) {
    std::istringstream tokens(line);
    std::string tag;
    if (!(tokens >> tag) || tag != "v")
      continue;
    int lit = 0;
    while (tokens >> lit) {
      if (lit == 0)
        continue;
      if (std::abs(lit) > num_vars)
        throw UsageError("model literal " + std::to_string(lit) + " out of range");
      model.set(std::abs(lit), lit > 0);
    }
  }
  return model;
}

class OutputFile {
public:
  OutputFile(const std::string &path, std::ostream &fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_)
        throw UsageError("cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream &get() { return *stream_; }

private:
  std::ofstream file_;
  std::ostream *stream_;
};

std::string format_real(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.10g", x);
  return buffer;
}

std::string format_vector(const markov::RowVector &v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i)
      s += ", ";
    s += format_real(v(i));
  }
  return s + ")";
}

std::string format_set(const std::vector<int> &states) {
  std::string s = "{";
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i)
      s += ", ";
    s += std::to_string(states[i]);
  }
  return s + "}";
}

// ---- solve -----------------------------------------------------------------

struct SolveArgs {
  std::string input;
  std::string algo = "valuation";
  int resolution = 2;
  double alpha = 0.1;
  std::uint64_t seed = 1;
  std::uint64_t max_steps = 0;
  int restarts = 1;
  std::string init = "half";
  bool accept_rounded = false;
  std::string reference;
};

void add_solve(CLI::App &app, SolveArgs &a) {
  app.add_option("input", a.input, "DIMACS CNF file; '-' or omitted reads standard input");
  app.add_option("--algo", a.algo,
                 "classic (boolean random walk, 3n flips per try), valuation (walk on the "
                 "valuation grid), hillclimb (cubic coordinate ascent on the clustered "
                 "formula), sparrow (make/break flips on the clustered formula)")
      ->capture_default_str()
      ->check(CLI::IsMember({"classic", "valuation", "hillclimb", "sparrow"}));
  app.add_option("--M", a.resolution, "valuation grid size: levels 0..M (valuation walk only)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--alpha", a.alpha,
                 "probability mass of the negative flip class (sparrow only), in (0, 1)")
      ->capture_default_str();
  app.add_option("--seed", a.seed, "random seed")->capture_default_str();
  app.add_option("--max-steps", a.max_steps,
                 "moves per try; 0 uses the default (classic 3n, valuation 4n^2M^2, "
                 "hillclimb 100n, sparrow 2m^2 on the clustered formula)")
      ->capture_default_str();
  app.add_option("--restarts", a.restarts, "number of tries, each from a fresh start")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--init", a.init,
                 "valuation walk start: half (all levels M/2, M even), s0 (random even "
                 "levels), boolean (random barrier levels)")
      ->capture_default_str()
      ->check(CLI::IsMember({"half", "s0", "boolean"}));
  app.add_flag("--accept-rounded", a.accept_rounded,
               "valuation walk and hillclimb: also stop when the rounded state satisfies");
  app.add_option("--reference", a.reference,
                 "known solution in v-line form; enables reflection counts and final "
                 "distance in the stats");
}

int run_solve(const SolveArgs &a, Streams io) {
  const DimacsFile file = load_formula(a.input, io.in);
  if (file.clause_count_mismatch)
    io.err << "warning: header declares " << file.declared_clauses << " clauses, found "
           << file.formula.num_clauses() << '\n';

  const Algorithm algo = parse_algorithm(a.algo);
  SolverConfig cfg;
  cfg.resolution = a.resolution;
  cfg.alpha = a.alpha;
  cfg.seed = a.seed;
  if (a.max_steps > 0)
    cfg.max_steps = a.max_steps;
  cfg.restarts = a.restarts;
  cfg.init = parse_init_mode(a.init);
  cfg.accept_rounded = a.accept_rounded;
  validate(cfg, algo);

  std::optional<Assignment> reference;
  if (!a.reference.empty()) {
    reference = read_model_file(a.reference, file.formula.num_vars());
    if (!satisfies(file.formula, *reference))
      throw UsageError("reference model does not satisfy the formula");
  }

  json config = {{"command", "solve"},
                 {"input", a.input.empty() ? "-" : a.input},
                 {"algo", std::string(to_string(algo))},
                 {"M", cfg.resolution},
                 {"alpha", cfg.alpha},
                 {"seed", cfg.seed},
                 {"max_steps", cfg.max_steps ? json(*cfg.max_steps) : json("default")},
                 {"restarts", cfg.restarts},
                 {"init", std::string(to_string(cfg.init))},
                 {"accept_rounded", cfg.accept_rounded},
                 {"reference", a.reference.empty() ? json(nullptr) : json(a.reference)}};
  io.err << "config " << config.dump() << '\n';

  const SolverResult result = solve(algo, file.formula, cfg, reference ? &*reference : nullptr);

  json stats = {{"vars", file.formula.num_vars()},
                {"clauses", file.formula.num_clauses()},
                {"steps", result.steps_used},
                {"tries", result.restarts_used}};
  if (reference) {
    stats["pos_refl"] = result.reflections.positive;
    stats["neg_refl"] = result.reflections.negative;
    if (result.final_hamming)
      stats["final_hamming"] = *result.final_hamming;
  }

  if (result.solved()) {
    if (!satisfies(file.formula, *result.model))
      throw std::logic_error("solver returned a model that does not verify");
    io.out << "SAT\n";
    write_model(io.out, *result.model);
  } else {
    io.out << "UNKNOWN\n";
  }
  io.out << "c stats " << stats.dump() << '\n';
  return result.solved() ? kExitOk : kExitUnknown;
}

// ---- transform -------------------------------------------------------------

struct TransformArgs {
  std::string input;
  std::string output;
  std::string map;
};

void add_transform(CLI::App &app, TransformArgs &a) {
  app.add_option("input", a.input, "DIMACS 3-CNF file; '-' or omitted reads standard input");
  app.add_option("-o,--output", a.output, "write the clustered formula here (default stdout)");
  app.add_option("--map", a.map,
                 "write the occurrence map, one 'occurrence original' pair per line");
}

int run_transform(const TransformArgs &a, Streams io) {
  const DimacsFile file = load_formula(a.input, io.in);
  json config = {{"command", "transform"},
                 {"input", a.input.empty() ? "-" : a.input},
                 {"output", a.output.empty() ? "-" : a.output},
                 {"map", a.map.empty() ? json(nullptr) : json(a.map)}};
  io.err << "config " << config.dump() << '\n';

  const ClusteredFormula cf = cluster_expression(file.formula);
  OutputFile out(a.output, io.out);
  write_dimacs(out.get(), cf.formula());
  if (!a.map.empty()) {
    OutputFile map(a.map, io.out);
    write_occurrence_map(map.get(), cf);
  }
  io.err << "clustered: " << cf.formula().num_vars() << " variables, "
         << cf.num_primary_clauses() << " rewritten clauses, "
         << cf.formula().num_clauses() - cf.num_primary_clauses() << " chain clauses\n";
  return kExitOk;
}

// ---- generate --------------------------------------------------------------

struct GenerateArgs {
  int n = 20;
  std::size_t m = 0;
  std::uint64_t seed = 1;
  bool planted = false;
  std::string output;
  std::string solution;
};

void add_generate(CLI::App &app, GenerateArgs &a) {
  app.add_option("--n", a.n, "number of variables (at least 3)")->capture_default_str();
  app.add_option("--m", a.m, "number of clauses; 0 means round(4.0 n)")->capture_default_str();
  app.add_option("--seed", a.seed, "random seed")->capture_default_str();
  app.add_flag("--planted", a.planted,
               "only keep clauses satisfied by a hidden random assignment");
  app.add_option("-o,--output", a.output, "write the formula here (default stdout)");
  app.add_option("--solution", a.solution,
                 "write the hidden assignment in v-line form (requires --planted)");
}

int run_generate(const GenerateArgs &a, Streams io) {
  if (!a.solution.empty() && !a.planted)
    throw UsageError("--solution requires --planted");
  const std::size_t m = a.m > 0 ? a.m : static_cast<std::size_t>(std::llround(4.0 * a.n));
  json config = {{"command", "generate"}, {"n", a.n},          {"m", m},
                 {"seed", a.seed},        {"planted", a.planted},
                 {"output", a.output.empty() ? "-" : a.output},
                 {"solution", a.solution.empty() ? json(nullptr) : json(a.solution)}};
  io.err << "config " << config.dump() << '\n';

  if (a.planted) {
    const PlantedInstance instance = generate_planted_3sat(a.n, m, a.seed);
    OutputFile out(a.output, io.out);
    write_dimacs(out.get(), instance.formula);
    if (!a.solution.empty()) {
      OutputFile sol(a.solution, io.out);
      write_model(sol.get(), instance.solution);
    }
  } else {
    OutputFile out(a.output, io.out);
    write_dimacs(out.get(), generate_random_3sat(a.n, m, a.seed));
  }
  return kExitOk;
}

// ---- analyze-chain ---------------------------------------------------------

struct ChainArgs {
  int resolution = 2;
  std::string check = "stationary";
  int k = 1;
  std::uint64_t exponent = markov::kDefaultLimitExponent;
  int r = 100;
  std::vector<double> t{0.5, 1.0, 2.0, 4.0};
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 1;
  bool csv = false;
};

constexpr double kStationaryTolerance = 1e-10;
constexpr double kLimitTolerance = 1e-8;
constexpr double kClosedFormTolerance = 1e-12;
constexpr double kFirstPassageSigmas = 3.0;

void add_chain(CLI::App &app, ChainArgs &a) {
  app.add_option("--M", a.resolution,
                 "size of the reflecting walk on levels 0..M (a3 uses M = 4)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--check", a.check,
                 "stationary (LU solve against 1/(2M), 1/M), period (period and cyclic "
                 "classes), limits (rows of A^N against d pi(y) for both parities), a3 "
                 "(closed forms of A^(2k-1) and A^(2k) for M = 4), first-passage (Monte "
                 "Carlo first passage through r within t r^2 steps against "
                 "2(1 - Phi(1/sqrt t)))")
      ->capture_default_str()
      ->check(CLI::IsMember({"stationary", "period", "limits", "a3", "first-passage"}));
  app.add_option("--k", a.k, "closed-form index for a3 (k >= 1)")->capture_default_str();
  app.add_option("--exponent", a.exponent,
                 "base exponent for limits; the odd check uses the next odd value")
      ->capture_default_str();
  app.add_option("--r", a.r, "barrier distance for first-passage")->capture_default_str();
  app.add_option("--t", a.t, "time ratios for first-passage")->capture_default_str();
  app.add_option("--trials", a.trials, "Monte Carlo walks per time ratio")->capture_default_str();
  app.add_option("--seed", a.seed, "random seed for first-passage")->capture_default_str();
  app.add_flag("--csv", a.csv, "print the numbers as CSV instead of a text report");
}

bool check_stationary(const ChainArgs &a, std::ostream &out) {
  const markov::Matrix P = markov::reflecting_walk_matrix(a.resolution);
  const markov::RowVector pi = markov::stationary_distribution(P);
  const markov::RowVector closed = markov::reflecting_walk_stationary_closed_form(a.resolution);
  const double error = (pi - closed).cwiseAbs().maxCoeff();
  const double residual = (pi * P - pi).cwiseAbs().maxCoeff();
  const bool pass = error <= kStationaryTolerance && residual <= kStationaryTolerance;
  if (a.csv) {
    out << "state,stationary,closed_form\n";
    for (int i = 0; i <= a.resolution; ++i)
      out << i << ',' << format_real(pi(i)) << ',' << format_real(closed(i)) << '\n';
  } else {
    out << "M = " << a.resolution << '\n'
        << "stationary " << format_vector(pi) << '\n'
        << "closed form " << format_vector(closed) << '\n'
        << "max |pi - closed form| = " << format_real(error) << '\n'
        << "max |pi A - pi| = " << format_real(residual) << '\n'
        << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass;
}

bool check_period(const ChainArgs &a, std::ostream &out) {
  const markov::Matrix P = markov::reflecting_walk_matrix(a.resolution);
  const markov::CyclicDecomposition found = markov::period_and_classes(P);
  const markov::CyclicDecomposition expected =
      markov::reflecting_walk_classes_closed_form(a.resolution);
  const bool pass = found.period == expected.period && found.classes == expected.classes;
  if (a.csv) {
    out << "state,class\n";
    for (int s = 0; s <= a.resolution; ++s)
      out << s << ',' << found.class_of[static_cast<std::size_t>(s)] << '\n';
  } else {
    out << "M = " << a.resolution << '\n' << "period " << found.period << '\n';
    for (std::size_t c = 0; c < found.classes.size(); ++c)
      out << "S" << c << " = " << format_set(found.classes[c]) << '\n';
    out << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass;
}

bool check_limits(const ChainArgs &a, std::ostream &out) {
  const markov::Matrix P = markov::reflecting_walk_matrix(a.resolution);
  bool pass = true;
  if (a.csv)
    out << "parity,exponent,from,to,power,limit\n";
  else
    out << "M = " << a.resolution << '\n';
  for (markov::Parity parity : {markov::Parity::even, markov::Parity::odd}) {
    const std::uint64_t exponent = markov::limit_exponent(parity, a.exponent);
    const char *name = parity == markov::Parity::even ? "even" : "odd";
    for (int from = 0; from <= a.resolution; ++from) {
      const markov::LimitCheck c = markov::convergence_limits(P, from, parity, exponent);
      pass = pass && c.max_error <= kLimitTolerance;
      if (a.csv) {
        for (int y = 0; y <= a.resolution; ++y)
          out << name << ',' << exponent << ',' << from << ',' << y << ','
              << format_real(c.row(y)) << ',' << format_real(c.expected(y)) << '\n';
      } else {
        out << "A^" << exponent << " row " << from << ' ' << format_vector(c.row) << " limit "
            << format_vector(c.expected) << " error " << format_real(c.max_error) << '\n';
      }
    }
  }
  if (!a.csv)
    out << (pass ? "PASS" : "FAIL") << '\n';
  return pass;
}

bool check_a3(const ChainArgs &a, std::ostream &out) {
  if (a.resolution != 4)
    throw UsageError("the a3 check is defined for the M = 4 walk; pass --M 4");
  if (a.k < 1)
    throw UsageError("--k must be at least 1");
  const markov::Matrix P = markov::reflecting_walk_matrix(4);
  bool pass = true;
  if (a.csv)
    out << "exponent,i,j,power,closed_form\n";
  else
    out << "k = " << a.k << '\n';
  for (markov::Parity parity : {markov::Parity::odd, markov::Parity::even}) {
    const auto exponent = static_cast<std::uint64_t>(2 * a.k - (parity == markov::Parity::odd));
    const markov::Matrix power = markov::matrix_power(P, exponent);
    const markov::Matrix closed = markov::a3_closed_form(a.k, parity);
    const double error = (power - closed).cwiseAbs().maxCoeff();
    pass = pass && error <= kClosedFormTolerance;
    if (a.csv) {
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
          out << exponent << ',' << i << ',' << j << ',' << format_real(power(i, j)) << ','
              << format_real(closed(i, j)) << '\n';
    } else {
      out << "A^" << exponent << " closed form max error " << format_real(error) << '\n';
      for (int i = 0; i < 5; ++i)
        out << "  " << format_vector(closed.row(i)) << '\n';
    }
  }
  if (!a.csv)
    out << (pass ? "PASS" : "FAIL") << '\n';
  return pass;
}

bool check_first_passage(const ChainArgs &a, std::ostream &out) {
  if (a.t.empty())
    throw UsageError("--t needs at least one value");
  bool pass = true;
  if (a.csv)
    out << "t,horizon,trials,hits,estimate,stderr,limit,z\n";
  else
    out << "r = " << a.r << ", trials = " << a.trials << '\n';
  for (std::size_t i = 0; i < a.t.size(); ++i) {
    const double t = a.t[i];
    const markov::FirstPassageEstimate e =
        markov::first_passage_estimate(a.r, t, a.trials, derive_seed(a.seed, i));
    const double limit = markov::normal_first_passage_limit(t);
    const double gap = std::abs(e.probability - limit);
    const bool ok = gap <= kFirstPassageSigmas * e.standard_error;
    pass = pass && ok;
    const double z = e.standard_error > 0.0 ? gap / e.standard_error : INFINITY;
    if (a.csv) {
      out << format_real(t) << ',' << e.horizon << ',' << e.trials << ',' << e.hits << ','
          << format_real(e.probability) << ',' << format_real(e.standard_error) << ','
          << format_real(limit) << ',' << format_real(z) << '\n';
    } else {
      out << "t = " << format_real(t) << ": estimate " << format_real(e.probability) << " +- "
          << format_real(e.standard_error) << ", limit " << format_real(limit) << ", "
          << format_real(z) << " standard errors " << (ok ? "ok" : "outside") << '\n';
    }
  }
  if (!a.csv)
    out << (pass ? "PASS" : "FAIL") << '\n';
  return pass;
}

int run_chain(const ChainArgs &a, Streams io) {
  json config = {{"command", "analyze-chain"},
                 {"M", a.resolution},
                 {"check", a.check},
                 {"k", a.k},
                 {"exponent", a.exponent},
                 {"r", a.r},
                 {"t", a.t},
                 {"trials", a.trials},
                 {"seed", a.seed},
                 {"csv", a.csv}};
  io.err << "config " << config.dump() << '\n';
  bool pass = false;
  if (a.check == "stationary")
    pass = check_stationary(a, io.out);
  else if (a.check == "period")
    pass = check_period(a, io.out);
  else if (a.check == "limits")
    pass = check_limits(a, io.out);
  else if (a.check == "a3")
    pass = check_a3(a, io.out);
  else
    pass = check_first_passage(a, io.out);
  return pass ? kExitOk : kExitUnknown;
}

// ---- bench -----------------------------------------------------------------

struct BenchArgs {
  std::string spec_file;
  std::map<std::string, std::string> settings; // spec key -> flag value
  std::string report;
};

void add_bench(CLI::App &app, BenchArgs &a) {
  app.add_option("spec", a.spec_file,
                 "experiment spec file of 'key = value' lines; flags override it");
  struct Flag {
    const char *name;
    const char *key;
    const char *help;
  };
  static const Flag flags[] = {
      {"--algo", "algo", "classic, valuation, hillclimb or sparrow (default valuation)"},
      {"--n", "n", "comma separated instance sizes, e.g. 10,20,30,40"},
      {"--ratio", "ratio", "clauses per variable (default 4.0)"},
      {"--M", "M", "valuation grid rule: n, 2n or a fixed integer (default n)"},
      {"--seeds", "seeds", "cells per size (default 1)"},
      {"--seed", "seed", "first cell seed; cells use seed, seed+1, ... (default 1)"},
      {"--max-steps", "max_steps", "moves per try (default: the algorithm's budget)"},
      {"--restarts", "restarts", "tries per cell (default 1)"},
      {"--alpha", "alpha", "negative flip class mass for sparrow (default 0.1)"},
      {"--init", "init", "valuation walk start: half, s0 or boolean (default half)"},
      {"--accept-rounded", "accept_rounded", "true/false (default false)"},
      {"--planted", "planted",
       "true for planted instances (default), false for uniform instances checked by "
       "brute force (n <= 24)"},
      {"--wall-time", "wall_time", "true records wall_ms; false writes 0 (default)"},
      {"--jobs", "jobs", "worker threads (default 1)"},
      {"-o,--output", "output", "CSV destination (default stdout)"},
  };
  for (const Flag &f : flags)
    app.add_option_function<std::string>(
        f.name, [&a, key = std::string(f.key)](const std::string &v) { a.settings[key] = v; },
        f.help);
  app.add_option("--report", a.report,
                 "write the per-size summary and log-log slope here (default stderr)");
}

int run_bench(const BenchArgs &a, Streams io) {
  bench::ExperimentSpec spec;
  if (!a.spec_file.empty()) {
    std::ifstream file(a.spec_file);
    if (!file)
      throw UsageError("cannot open spec file " + a.spec_file);
    spec = bench::parse_spec(file);
  }
  for (const auto &[key, value] : a.settings)
    bench::apply_setting(spec, key, value);
  bench::validate(spec);

  std::string sizes;
  for (int n : spec.n_values)
    sizes += (sizes.empty() ? "" : ",") + std::to_string(n);
  json config = {{"command", "bench"},
                 {"algo", std::string(to_string(spec.algo))},
                 {"n", sizes},
                 {"ratio", spec.clause_ratio},
                 {"M", spec.resolution.describe()},
                 {"seeds", spec.seeds},
                 {"seed", spec.base_seed},
                 {"max_steps", spec.max_steps ? json(*spec.max_steps) : json("default")},
                 {"restarts", spec.restarts},
                 {"alpha", spec.alpha},
                 {"init", std::string(to_string(spec.init))},
                 {"accept_rounded", spec.accept_rounded},
                 {"planted", spec.planted},
                 {"wall_time", spec.record_wall_time},
                 {"jobs", spec.jobs},
                 {"output", spec.output_path.empty() ? "-" : spec.output_path}};
  io.err << "config " << config.dump() << '\n';

  OutputFile csv(spec.output_path, io.out);
  const std::vector<bench::CellResult> results = bench::run_experiment(spec);
  bench::write_csv(csv.get(), results);

  OutputFile report(a.report, io.err);
  try {
    bench::write_report(report.get(), bench::fit_scaling(results));
  } catch (const bench::BenchError &e) {
    for (const bench::SizeSummary &s : bench::summarize(results))
      report.get() << "n = " << s.n << ": solved " << s.solved << " of " << s.cells << '\n';
    report.get() << "no scaling fit: " << e.what() << '\n';
  }
  return kExitOk;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::istream &in, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Local search for 3-SAT on boolean and graded truth valuations, and analysis "
               "of the reflecting random walk behind it."};
  app.name("valsat");
  app.require_subcommand(1);

  SolveArgs solve_args;
  TransformArgs transform_args;
  GenerateArgs generate_args;
  ChainArgs chain_args;
  BenchArgs bench_args;
  CLI::App *solve_cmd = app.add_subcommand("solve", "run a local search solver on a DIMACS file");
  CLI::App *transform_cmd = app.add_subcommand(
      "transform", "rewrite a 3-CNF so each variable occurs once, tied by equality chains");
  CLI::App *generate_cmd = app.add_subcommand("generate", "write a random 3-CNF instance");
  CLI::App *chain_cmd = app.add_subcommand(
      "analyze-chain", "numerical checks of the per-variable reflecting walk");
  CLI::App *bench_cmd = app.add_subcommand("bench", "run a scaling experiment and write CSV");
  add_solve(*solve_cmd, solve_args);
  add_transform(*transform_cmd, transform_args);
  add_generate(*generate_cmd, generate_args);
  add_chain(*chain_cmd, chain_args);
  add_bench(*bench_cmd, bench_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const Streams io{in, out, err};
  try {
    if (*solve_cmd)
      return run_solve(solve_args, io);
    if (*transform_cmd)
      return run_transform(transform_args, io);
    if (*generate_cmd)
      return run_generate(generate_args, io);
    if (*chain_cmd)
      return run_chain(chain_args, io);
    return run_bench(bench_args, io);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

} // namespace valsat
