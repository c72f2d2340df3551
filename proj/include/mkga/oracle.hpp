// Exact solver for small instances and gap arithmetic.

#ifndef MKGA_ORACLE_HPP
#define MKGA_ORACLE_HPP

#include <cstddef>
#include <stdexcept>

#include "mkga/instance.hpp"

namespace mkga {

inline constexpr std::size_t kOracleGuardLimit = 30;

class GuardLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExactSolution {
  double value = 0.0;
  Selection selection;
};

// Depth-first branch and bound over objects in unit-multiplier ratio
// order, pruning on capacity violation and on the sum of remaining
// values. Throws GuardLimitExceeded when n exceeds `guard_limit` unless
// `force` is set.
ExactSolution solve_exact(const Instance& instance,
                          std::size_t guard_limit = kOracleGuardLimit,
                          bool force = false);

// 100 * (reference - best) / reference. Throws std::invalid_argument when
// reference <= 0 or best > reference.
double percent_gap(double best, double reference);

}  // namespace mkga

#endif  // MKGA_ORACLE_HPP
