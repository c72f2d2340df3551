#include "mkga/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "mkga/bench.hpp"
#include "mkga/ga.hpp"
#include "mkga/generate.hpp"
#include "mkga/greedy.hpp"
#include "mkga/instance.hpp"
#include "mkga/multipliers.hpp"
#include "mkga/oracle.hpp"

namespace mkga {

namespace {

namespace fs = std::filesystem;

// Unreadable input; maps to exit code 1.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Command-line values that are not already GaConfig fields.
struct GaFlags {
  GaConfig config;
  double mutation_rate = -1;       // < 0 means 1/n
  std::size_t no_improvement = 200;  // 0 disables
  double time_limit = 0;           // 0 disables
  bool no_divide_by_m = false;
  bool print_config = false;

  GaConfig resolve() const {
    GaConfig c = config;
    if (mutation_rate >= 0) c.mutation_rate = mutation_rate;
    c.no_improvement_limit =
        no_improvement ? std::optional<std::size_t>(no_improvement) : std::nullopt;
    if (time_limit > 0) c.time_limit_seconds = time_limit;
    c.divide_by_m = !no_divide_by_m;
    return c;
  }
};

void add_ga_flags(CLI::App* cmd, GaFlags& f) {
  auto& c = f.config;
  cmd->add_option("--population", c.population_size, "Population size")
      ->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--generations", c.generations, "Maximum generations")
      ->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--inclusion-probability", c.inclusion_probability,
                  "Probability that an object is chosen in the initial population")
      ->capture_default_str()->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--mutation-rate", f.mutation_rate, "Per-bit flip probability (default 1/n)")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--tournament", c.tournament_size, "Tournament size")->capture_default_str();
  cmd->add_option("--elite", c.elite_count, "Individuals carried over unchanged")
      ->capture_default_str();
  cmd->add_option("--no-improvement-limit", f.no_improvement,
                  "Stop after this many generations without improvement (0 disables)")
      ->capture_default_str();
  cmd->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  cmd->add_flag("--no-divide-by-m", f.no_divide_by_m,
                "Do not divide the ratio denominator by m");
  cmd->add_option("--multiplier-iters", c.multiplier_iterations, "Subgradient iterations")
      ->capture_default_str();
  cmd->add_option("--multiplier-step", c.multiplier_step, "Initial subgradient step")
      ->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--time-limit", f.time_limit, "Wall-clock seconds per run (0 disables)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--print-config", f.print_config, "Print the effective configuration");
}

void print_config(std::ostream& out, const GaConfig& c) {
  out << "population_size=" << c.population_size << '\n'
      << "generations=" << c.generations << '\n'
      << "inclusion_probability=" << format_number(c.inclusion_probability) << '\n'
      << "mutation_rate="
      << (c.mutation_rate ? format_number(*c.mutation_rate) : std::string("1/n")) << '\n'
      << "tournament_size=" << c.tournament_size << '\n'
      << "elite_count=" << c.elite_count << '\n'
      << "no_improvement_limit="
      << (c.no_improvement_limit ? std::to_string(*c.no_improvement_limit) : "none") << '\n'
      << "seed=" << c.seed << '\n'
      << "divide_by_m=" << (c.divide_by_m ? "true" : "false") << '\n'
      << "multiplier_iterations=" << c.multiplier_iterations << '\n'
      << "multiplier_step=" << format_number(c.multiplier_step) << '\n'
      << "time_limit_seconds="
      << (c.time_limit_seconds ? format_number(*c.time_limit_seconds) : "none") << '\n';
}

std::vector<Instance> load(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  const std::string stem = fs::path(path).stem().string();
  if (format == "orlib") return parse_orlib(in, stem);
  return {parse_weing(in, stem)};
}

std::string one_based(const Selection& sel) {
  std::string s;
  for (std::size_t i : sel.indices()) s += (s.empty() ? "" : " ") + std::to_string(i + 1);
  return s.empty() ? "(none)" : s;
}

std::string fixed(double x, int decimals) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(decimals) << x;
  return o.str();
}

int cmd_solve(const std::string& path, const std::string& format, const GaFlags& flags,
              std::ostream& out) {
  const GaConfig config = flags.resolve();
  config.validate();
  if (flags.print_config) print_config(out, config);
  for (const auto& instance : load(path, format)) {
    const GaResult result = evolve(instance, config);
    out << "instance=" << instance.name << " n=" << instance.n << " m=" << instance.m << '\n'
        << "best=" << format_number(result.best.value) << '\n';
    if (instance.known_optimum) {
      out << "gap=" << format_number(percent_gap(result.best.value, *instance.known_optimum))
          << "% (vs optimum " << format_number(*instance.known_optimum) << ")\n";
    } else {
      out << "gap=" << format_number(percent_gap(result.best.value, result.upper_bound))
          << "% (vs bound " << format_number(result.upper_bound) << ")\n";
    }
    out << "greedy_baseline=" << format_number(result.greedy_baseline) << '\n'
        << "upper_bound=" << format_number(result.upper_bound) << '\n'
        << "generation_found=" << result.generation_found << '\n'
        << "generations_run=" << result.generations_run << '\n'
        << "elapsed_seconds=" << fixed(result.elapsed.count(), 3) << '\n'
        << "selected=" << one_based(result.best.sel) << '\n';
  }
  return kExitOk;
}

std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<std::string> files;
  for (const auto& p : inputs) {
    if (fs::is_directory(p)) {
      std::vector<std::string> found;
      for (const auto& entry : fs::directory_iterator(p))
        if (entry.is_regular_file()) found.push_back(entry.path().string());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(p);
    }
  }
  return files;
}

int cmd_bench(const std::vector<std::string>& inputs, const std::string& format,
              std::size_t trials, std::size_t workers, const std::string& report_format,
              const std::string& output, const GaFlags& flags, std::ostream& out,
              std::ostream& err) {
  const GaConfig config = flags.resolve();
  config.validate();
  const ReportFormat fmt = parse_report_format(report_format);
  if (flags.print_config) print_config(out, config);

  std::vector<Instance> instances;
  for (const auto& file : expand_inputs(inputs)) {
    try {
      for (auto& instance : load(file, format)) instances.push_back(std::move(instance));
    } catch (const std::exception& e) {
      err << "skipping " << file << ": " << e.what() << '\n';
    }
  }
  if (instances.empty()) {
    err << "error: no valid instances\n";
    return kExitUsage;
  }

  const std::string text = emit_report(run_benchmark(instances, config, trials, workers), fmt);
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream file(output);
    if (!(file << text)) throw IoError("cannot write '" + output + "'");
  }
  return kExitOk;
}

int cmd_oracle(const std::string& path, const std::string& format, bool force,
               std::ostream& out, std::ostream& err) {
  for (const auto& instance : load(path, format)) {
    if (force && instance.n > kOracleGuardLimit) {
      err << "warning: exact search on n=" << instance.n
          << " objects may take exponential time\n";
    }
    const ExactSolution sol = solve_exact(instance, kOracleGuardLimit, force);
    out << "instance=" << instance.name << " n=" << instance.n << " m=" << instance.m << '\n'
        << "optimum=" << format_number(sol.value) << '\n'
        << "selected=" << one_based(sol.selection) << '\n';
  }
  return kExitOk;
}

int cmd_ratios(const std::string& path, const std::string& format, std::size_t iterations,
               double step, bool divide_by_m, std::ostream& out) {
  for (const auto& instance : load(path, format)) {
    const Multipliers mult = compute_multipliers(instance, iterations, step);
    const UtilityRatios ratios = compute_ratios(instance, mult, divide_by_m);
    std::vector<std::size_t> rank(instance.n);
    for (std::size_t k = 0; k < ratios.order.size(); ++k) rank[ratios.order[k]] = k + 1;

    out << "instance=" << instance.name << " n=" << instance.n << " m=" << instance.m << '\n'
        << "multipliers=";
    for (std::size_t j = 0; j < mult.l.size(); ++j)
      out << (j ? " " : "") << format_number(mult.l[j]);
    out << '\n'
        << "best_bound=" << format_number(mult.best_bound) << '\n'
        << "greedy_estimate=" << format_number(greedy_estimate(instance, mult)) << '\n'
        << "object value denominator ratio rank\n";
    for (std::size_t i = 0; i < instance.n; ++i) {
      out << (i + 1) << ' ' << format_number(instance.values[i]) << ' '
          << format_number(ratios.denominator[i]) << ' '
          << (std::isinf(ratios.r[i]) ? std::string("inf") : format_number(ratios.r[i]))
          << ' ' << rank[i] << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genetic algorithm for the 0/1 multidimensional knapsack problem", "mkga"};
  app.require_subcommand(1);

  std::string path, format = "weing", format_pos;
  GaFlags ga_flags;

  auto* solve = app.add_subcommand("solve", "Solve instances with the genetic algorithm");
  solve->add_option("file", path, "Instance file")->required();
  solve->add_option("FORMAT", format_pos, "weing or orlib (positional form)");
  solve->add_option("--format", format, "weing or orlib")->capture_default_str();
  add_ga_flags(solve, ga_flags);

  std::vector<std::string> bench_inputs;
  std::size_t trials = 20, workers = 1;
  std::string report = "csv", output;
  GaFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "Repeated-trial benchmark report");
  bench->add_option("inputs", bench_inputs, "Instance files or directories")->required();
  bench->add_option("--format", format, "weing or orlib")->capture_default_str();
  bench->add_option("--trials", trials, "Trials per instance")
      ->capture_default_str()->check(CLI::PositiveNumber);
  bench->add_option("--workers", workers, "Worker threads (0 = all cores)")
      ->capture_default_str();
  bench->add_option("--report", report, "table or csv")->capture_default_str();
  bench->add_option("--output,-o", output, "Write the report to this file");
  add_ga_flags(bench, bench_flags);

  bool force = false;
  auto* oracle = app.add_subcommand("oracle", "Exact optimum for small instances");
  oracle->add_option("file", path, "Instance file")->required();
  oracle->add_option("FORMAT", format_pos, "weing or orlib (positional form)");
  oracle->add_option("--format", format, "weing or orlib")->capture_default_str();
  oracle->add_flag("--force", force, "Run past the size guard");

  std::size_t ratio_iters = kDefaultMultiplierIterations;
  double ratio_step = kDefaultMultiplierStep;
  bool no_divide = false;
  auto* ratios = app.add_subcommand("ratios", "Show multipliers and utility ratios");
  ratios->add_option("file", path, "Instance file")->required();
  ratios->add_option("FORMAT", format_pos, "weing or orlib (positional form)");
  ratios->add_option("--format", format, "weing or orlib")->capture_default_str();
  ratios->add_option("--multiplier-iters", ratio_iters, "Subgradient iterations (0 = unit)")
      ->capture_default_str();
  ratios->add_option("--multiplier-step", ratio_step, "Initial subgradient step")
      ->capture_default_str()->check(CLI::PositiveNumber);
  ratios->add_flag("--no-divide-by-m", no_divide, "Do not divide the denominator by m");

  std::size_t gen_n = 0, gen_m = 0;
  std::uint64_t gen_seed = 1;
  double tightness = kDefaultTightness;
  auto* gen = app.add_subcommand("gen", "Emit a random instance in weing format");
  gen->add_option("--n", gen_n, "Objects")->required()->check(CLI::PositiveNumber);
  gen->add_option("--m", gen_m, "Constraints")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
  gen->add_option("--tightness", tightness, "Capacity as a fraction of total weight")
      ->capture_default_str()->check(CLI::Range(0.0, 1.0));

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (!format_pos.empty()) format = format_pos;
  try {
    if (format != "weing" && format != "orlib")
      throw std::invalid_argument("format must be weing or orlib, got '" + format + "'");
    if (*solve) return cmd_solve(path, format, ga_flags, out);
    if (*bench)
      return cmd_bench(bench_inputs, format, trials, workers, report, output, bench_flags, out,
                       err);
    if (*oracle) return cmd_oracle(path, format, force, out, err);
    if (*ratios) return cmd_ratios(path, format, ratio_iters, ratio_step, !no_divide, out);
    if (*gen) {
      out << write_weing(generate_instance(gen_n, gen_m, gen_seed, tightness));
      return kExitOk;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GuardLimitExceeded& e) {
    err << "refused: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace mkga
