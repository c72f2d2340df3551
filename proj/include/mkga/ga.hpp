// Genetic algorithm with Lagrangian-ratio greedy crossover.
//
// Each generation keeps `elite_count` best individuals and fills the rest
// with mutate(greedy_crossover(tournament, tournament)). Infeasible
// individuals stay in the population; they rank below every feasible one.

#ifndef MKGA_GA_HPP
#define MKGA_GA_HPP

#include <chrono>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "mkga/instance.hpp"
#include "mkga/multipliers.hpp"

namespace mkga {

using Rng = std::mt19937_64;

struct Individual {
  Selection sel;
  double value = 0.0;
  std::vector<double> usage;  // per constraint
  bool feasible = true;
  double violation = 0.0;     // sum_j max(0, usage_j - c_j) / max(c_j, 1)
};

Individual make_individual(const Instance& instance, Selection sel);

struct GaConfig {
  std::size_t population_size = 100;
  std::size_t generations = 500;
  double inclusion_probability = 0.5;
  std::optional<double> mutation_rate;  // per bit; unset means 1/n
  std::size_t tournament_size = 3;
  std::size_t elite_count = 2;
  std::optional<std::size_t> no_improvement_limit = 200;
  std::uint64_t seed = 1;
  bool divide_by_m = true;
  std::size_t multiplier_iterations = kDefaultMultiplierIterations;
  double multiplier_step = kDefaultMultiplierStep;
  std::optional<double> time_limit_seconds;  // wall clock per evolve call

  // Throws std::invalid_argument on any violated field constraint.
  void validate() const;
  double effective_mutation_rate(std::size_t n) const;
};

struct GaResult {
  Individual best;
  std::size_t generation_found = 0;  // 0 = initial population
  std::size_t generations_run = 0;
  std::vector<double> history;          // best-ever value after each generation
  std::vector<double> generation_best;  // best feasible value in each population
  std::chrono::duration<double> elapsed{0};
  double greedy_baseline = 0.0;
  double upper_bound = 0.0;
  bool hit_time_limit = false;
};

std::vector<Individual> init_population(const Instance& instance,
                                        const GaConfig& config, Rng& rng);

// greater: `a` is fitter than `b`. Feasible beats infeasible; feasibles
// compare by value; infeasibles by smaller violation, then by value.
std::weak_ordering fitness_rank(const Individual& a, const Individual& b);

// Tournament with replacement; the earliest drawn wins ties.
const Individual& select_parent(std::span<const Individual> population,
                                const GaConfig& config, Rng& rng);

// Rebuilds one feasible offspring from the union of both parents' objects.
Individual greedy_crossover(const Instance& instance, const UtilityRatios& ratios,
                            const Individual& a, const Individual& b);

Individual mutate(const Instance& instance, const Individual& ind,
                  const GaConfig& config, Rng& rng);

GaResult evolve(const Instance& instance, const GaConfig& config);

}  // namespace mkga

#endif  // MKGA_GA_HPP
