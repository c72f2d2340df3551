// Repeated-trial benchmark harness: per instance solve counts, mean
// wall-clock time, and best-of-trials percent gap.

#ifndef MKGA_BENCH_HPP
#define MKGA_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mkga/ga.hpp"
#include "mkga/instance.hpp"

namespace mkga {

struct TrialRecord {
  std::string instance;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double best_value = 0.0;
  bool solved_exactly = false;  // best_value == known optimum
  double elapsed_seconds = 0.0;
  std::size_t generation_found = 0;
  double greedy_baseline = 0.0;
  double upper_bound = 0.0;
};

enum class GapReference { kKnownOptimum, kUpperBound };

struct BenchRow {
  std::string instance;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t solved = 0;
  double mean_seconds = 0.0;
  double best_value = 0.0;
  double reference = 0.0;
  double gap_percent = 0.0;
  GapReference gap_reference = GapReference::kKnownOptimum;
  std::uint64_t base_seed = 0;
  std::vector<TrialRecord> records;  // sorted by trial index
  std::optional<std::string> error;  // set when the instance failed
};

struct BenchReport {
  std::vector<BenchRow> rows;
};

// Trial t of every instance uses seed config.seed + t. `workers` threads
// share the trials; 0 picks the hardware concurrency. Results do not
// depend on the worker count apart from timings.
BenchReport run_benchmark(const std::vector<Instance>& instances, const GaConfig& config,
                          std::size_t trials, std::size_t workers = 1);

enum class ReportFormat { kTable, kCsv };

// Accepts "table" or "csv"; throws std::invalid_argument otherwise.
ReportFormat parse_report_format(std::string_view token);

inline constexpr std::string_view kCsvHeader =
    "instance,m,n,trials,solved,mean_seconds,best_value,reference,gap_percent,"
    "gap_reference";

std::string emit_report(const BenchReport& report, ReportFormat format);

}  // namespace mkga

#endif  // MKGA_BENCH_HPP
