// Lagrangian multipliers for the m capacity constraints and the
// multiplier-weighted utility ratios that order every greedy pass.
//
// Multipliers are computed once per instance by subgradient descent on
// the Lagrangian dual:
//
//   L(l) = sum_j l_j c_j + sum_i max(0, v_i - sum_j l_j w_ij)
//
// which bounds the integer optimum from above for any l >= 0.

#ifndef MKGA_MULTIPLIERS_HPP
#define MKGA_MULTIPLIERS_HPP

#include <cstddef>
#include <vector>

#include "mkga/instance.hpp"

namespace mkga {

inline constexpr double kMultiplierFloor = 1e-4;
inline constexpr std::size_t kDefaultMultiplierIterations = 100;
inline constexpr double kDefaultMultiplierStep = 0.5;
// Relative difference below which two finite ratios count as equal.
inline constexpr double kRatioTieTolerance = 1e-10;

struct Multipliers {
  std::vector<double> l;
  std::size_t iterations_run = 0;
  double best_bound = 0.0;  // smallest dual bound seen so far
};

struct UtilityRatios {
  std::vector<double> r;            // +inf for objects with zero denominator
  std::vector<double> denominator;  // d_i as used in r
  std::vector<std::size_t> order;   // best object first
};

// Unit multipliers with best_bound set to their dual bound.
Multipliers init_multipliers(const Instance& instance);

// Maximizer of the relaxed objective: x_i = 1 iff the reduced profit
// v_i - sum_j l_j w_ij is strictly positive.
Selection relaxed_selection(const Instance& instance, const Multipliers& mult);

double relaxation_bound(const Instance& instance, const Multipliers& mult);
double relaxation_bound(const Instance& instance, const std::vector<double>& l);

// One projected subgradient step with capacity-normalized subgradients.
// Throws std::invalid_argument when step <= 0.
Multipliers update_multipliers(const Instance& instance, const Multipliers& mult,
                               double step);

// Step multiplier for compute_multipliers: total value over total weight,
// the order of magnitude of a constraint price, but never below 1 so that
// unit starting multipliers can always reach the floor.
double price_scale(const Instance& instance);

// Runs `iterations` steps of size initial_step * price_scale / k from unit
// multipliers and returns the iterate with the smallest dual bound.
// iterations == 0 yields the unit multipliers.
Multipliers compute_multipliers(const Instance& instance,
                                std::size_t iterations = kDefaultMultiplierIterations,
                                double initial_step = kDefaultMultiplierStep);

// ratio_i = v_i / d_i with d_i = sum_j l_j w_ij, divided by m when
// divide_by_m is set. Objects with d_i == 0 rank first by descending
// value; remaining ties (within kRatioTieTolerance) break by ascending
// index.
UtilityRatios compute_ratios(const Instance& instance, const Multipliers& mult,
                             bool divide_by_m = true);

}  // namespace mkga

#endif  // MKGA_MULTIPLIERS_HPP
