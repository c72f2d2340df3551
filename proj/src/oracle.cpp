#include "mkga/oracle.hpp"

#include <vector>

#include "mkga/multipliers.hpp"

namespace mkga {

namespace {

class BranchAndBound {
 public:
  explicit BranchAndBound(const Instance& instance)
      : instance_(instance),
        order_(compute_ratios(instance, init_multipliers(instance)).order),
        used_(instance.m, 0.0),
        current_(instance.n),
        best_(instance.n) {
    suffix_value_.assign(order_.size() + 1, 0.0);
    for (std::size_t k = order_.size(); k-- > 0;)
      suffix_value_[k] = suffix_value_[k + 1] + instance.values[order_[k]];
  }

  ExactSolution run() {
    search(0, 0.0);
    return {best_value_, best_};
  }

 private:
  void search(std::size_t depth, double value) {
    if (value > best_value_) {
      best_value_ = value;
      best_ = current_;
    }
    if (depth == order_.size() || value + suffix_value_[depth] <= best_value_) return;

    const std::size_t i = order_[depth];
    bool fits = true;
    for (std::size_t j = 0; j < instance_.m && fits; ++j)
      fits = used_[j] + instance_.weights[j][i] <= instance_.capacities[j];
    if (fits) {
      for (std::size_t j = 0; j < instance_.m; ++j) used_[j] += instance_.weights[j][i];
      current_.set(i);
      search(depth + 1, value + instance_.values[i]);
      current_.set(i, false);
      for (std::size_t j = 0; j < instance_.m; ++j) used_[j] -= instance_.weights[j][i];
    }
    search(depth + 1, value);
  }

  const Instance& instance_;
  std::vector<std::size_t> order_;
  std::vector<double> suffix_value_;
  std::vector<double> used_;
  Selection current_;
  Selection best_;
  double best_value_ = 0.0;
};

}  // namespace

ExactSolution solve_exact(const Instance& instance, std::size_t guard_limit,
                          bool force) {
  if (instance.n > guard_limit && !force) {
    throw GuardLimitExceeded("instance has n=" + std::to_string(instance.n) +
                             " objects, above the exact-solver limit of " +
                             std::to_string(guard_limit) + "; pass force to override");
  }
  return BranchAndBound(instance).run();
}

double percent_gap(double best, double reference) {
  if (!(reference > 0)) throw std::invalid_argument("gap reference must be positive");
  if (best > reference) {
    throw std::invalid_argument("best value " + format_number(best) +
                                " exceeds gap reference " + format_number(reference));
  }
  if (best == reference) return 0.0;
  return 100.0 * (reference - best) / reference;
}

}  // namespace mkga
