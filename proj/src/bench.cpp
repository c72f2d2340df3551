#include "mkga/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mkga/oracle.hpp"

namespace mkga {

namespace {

struct Job {
  std::size_t instance;
  std::size_t trial;
};

struct Outcome {
  std::optional<TrialRecord> record;
  std::string error;
};

TrialRecord run_trial(const Instance& instance, const GaConfig& base, std::size_t trial) {
  GaConfig config = base;
  config.seed = base.seed + trial;
  const GaResult result = evolve(instance, config);

  TrialRecord rec;
  rec.instance = instance.name;
  rec.trial = trial;
  rec.seed = config.seed;
  rec.best_value = result.best.value;
  rec.solved_exactly = instance.known_optimum && result.best.value == *instance.known_optimum;
  rec.elapsed_seconds = result.elapsed.count();
  rec.generation_found = result.generation_found;
  rec.greedy_baseline = result.greedy_baseline;
  rec.upper_bound = result.upper_bound;
  return rec;
}

BenchRow aggregate(const Instance& instance, const GaConfig& config,
                   std::vector<Outcome> outcomes) {
  BenchRow row;
  row.instance = instance.name;
  row.m = instance.m;
  row.n = instance.n;
  row.trials = outcomes.size();
  row.base_seed = config.seed;
  for (auto& o : outcomes) {
    if (!o.record) {
      row.error = o.error;
      continue;
    }
    row.records.push_back(std::move(*o.record));
  }
  if (row.error) return row;

  double total_seconds = 0.0;
  row.best_value = row.records.front().best_value;
  double bound = row.records.front().upper_bound;
  for (const auto& rec : row.records) {
    row.solved += rec.solved_exactly ? 1 : 0;
    total_seconds += rec.elapsed_seconds;
    row.best_value = std::max(row.best_value, rec.best_value);
    bound = std::min(bound, rec.upper_bound);
  }
  row.mean_seconds = total_seconds / static_cast<double>(row.records.size());

  if (instance.known_optimum) {
    row.gap_reference = GapReference::kKnownOptimum;
    row.reference = *instance.known_optimum;
  } else {
    row.gap_reference = GapReference::kUpperBound;
    row.reference = bound;
  }
  try {
    row.gap_percent = row.reference > 0 ? percent_gap(row.best_value, row.reference) : 0.0;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

std::string fixed(double x, int decimals) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(decimals) << x;
  return out.str();
}

std::string gap_text(double gap) {
  if (gap == 0) return "0";
  std::string s = fixed(gap, 6);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

const char* reference_name(GapReference ref) {
  return ref == GapReference::kKnownOptimum ? "optimum" : "bound";
}

}  // namespace

BenchReport run_benchmark(const std::vector<Instance>& instances, const GaConfig& config,
                          std::size_t trials, std::size_t workers) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  config.validate();

  std::vector<Job> jobs;
  for (std::size_t k = 0; k < instances.size(); ++k)
    for (std::size_t t = 0; t < trials; ++t) jobs.push_back({k, t});
  std::vector<Outcome> outcomes(jobs.size());

  auto work = [&](std::atomic<std::size_t>& next) {
    for (std::size_t idx = next++; idx < jobs.size(); idx = next++) {
      const Job& job = jobs[idx];
      try {
        outcomes[idx].record = run_trial(instances[job.instance], config, job.trial);
      } catch (const std::exception& e) {
        outcomes[idx].error = e.what();
      }
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(jobs.size(), 1));
  std::atomic<std::size_t> next{0};
  if (workers <= 1) {
    work(next);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back([&] { work(next); });
  }

  // Jobs are laid out instance-major, trial-minor, so each slice is
  // already in trial order.
  BenchReport report;
  for (std::size_t k = 0; k < instances.size(); ++k) {
    std::vector<Outcome> slice(std::make_move_iterator(outcomes.begin() + k * trials),
                               std::make_move_iterator(outcomes.begin() + (k + 1) * trials));
    report.rows.push_back(aggregate(instances[k], config, std::move(slice)));
  }
  return report;
}

ReportFormat parse_report_format(std::string_view token) {
  if (token == "table") return ReportFormat::kTable;
  if (token == "csv") return ReportFormat::kCsv;
  throw std::invalid_argument("unknown report format '" + std::string(token) +
                              "' (expected table or csv)");
}

std::string emit_report(const BenchReport& report, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::kCsv) {
    out << kCsvHeader << '\n';
    for (const auto& row : report.rows) {
      out << row.instance << ',' << row.m << ',' << row.n << ',' << row.trials << ','
          << row.solved << ',' << fixed(row.mean_seconds, 3) << ','
          << format_number(row.best_value) << ',' << format_number(row.reference) << ','
          << gap_text(row.gap_percent) << ','
          << (row.error ? "error" : reference_name(row.gap_reference)) << '\n';
    }
    return out.str();
  }

  std::vector<std::vector<std::string>> cells = {
      {"Instance", "m", "n", "Solves Completely", "Time (mean)", "% gap", "Seed"}};
  for (const auto& row : report.rows) {
    if (row.error) {
      cells.push_back({row.instance, std::to_string(row.m), std::to_string(row.n),
                       "error: " + *row.error, "", "", std::to_string(row.base_seed)});
      continue;
    }
    std::string gap = gap_text(row.gap_percent);
    if (row.gap_reference == GapReference::kUpperBound) gap += " (vs bound)";
    cells.push_back({row.instance, std::to_string(row.m), std::to_string(row.n),
                     std::to_string(row.solved) + "/" + std::to_string(row.trials),
                     fixed(row.mean_seconds, 3) + " seconds", gap,
                     std::to_string(row.base_seed)});
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c + 1 == line.size()) {
        out << line[c] << '\n';
      } else {
        out << std::left << std::setw(static_cast<int>(width[c])) << line[c] << "  ";
      }
    }
  }
  return out.str();
}

}  // namespace mkga
