#include "mkga/ga.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mkga/greedy.hpp"

namespace mkga {

namespace {

using Clock = std::chrono::steady_clock;

bool reaches(double value, double target) {
  return value >= target - 1e-9 * std::max(1.0, std::fabs(target));
}

double best_feasible(const std::vector<Individual>& population) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& ind : population)
    if (ind.feasible) best = std::max(best, ind.value);
  return best;
}

}  // namespace

Individual make_individual(const Instance& instance, Selection sel) {
  if (sel.size() != instance.n)
    throw std::invalid_argument("selection length does not match instance");
  Individual ind;
  ind.usage.assign(instance.m, 0.0);
  for (std::size_t i = 0; i < instance.n; ++i) {
    if (!sel.test(i)) continue;
    ind.value += instance.values[i];
    for (std::size_t j = 0; j < instance.m; ++j) ind.usage[j] += instance.weights[j][i];
  }
  for (std::size_t j = 0; j < instance.m; ++j) {
    const double over = ind.usage[j] - instance.capacities[j];
    if (over > 0) {
      ind.feasible = false;
      ind.violation += over / std::max(instance.capacities[j], 1.0);
    }
  }
  ind.sel = std::move(sel);
  return ind;
}

void GaConfig::validate() const {
  auto fail = [](const char* what) { throw std::invalid_argument(what); };
  if (population_size < 1) fail("population_size must be positive");
  if (generations < 1) fail("generations must be positive");
  if (!(inclusion_probability >= 0 && inclusion_probability <= 1))
    fail("inclusion_probability must lie in [0, 1]");
  if (mutation_rate && !(*mutation_rate >= 0 && *mutation_rate <= 1))
    fail("mutation_rate must lie in [0, 1]");
  if (tournament_size < 2 && population_size >= 2) fail("tournament_size must be at least 2");
  if (tournament_size > population_size && population_size >= 2)
    fail("tournament_size must not exceed population_size");
  if (elite_count >= population_size) fail("elite_count must be below population_size");
  if (no_improvement_limit && *no_improvement_limit < 1)
    fail("no_improvement_limit must be positive");
  if (multiplier_iterations < 1) fail("multiplier_iterations must be positive");
  if (!(multiplier_step > 0)) fail("multiplier_step must be positive");
  if (time_limit_seconds && !(*time_limit_seconds > 0))
    fail("time_limit_seconds must be positive");
}

double GaConfig::effective_mutation_rate(std::size_t n) const {
  return mutation_rate.value_or(1.0 / static_cast<double>(std::max<std::size_t>(n, 1)));
}

std::vector<Individual> init_population(const Instance& instance,
                                        const GaConfig& config, Rng& rng) {
  std::bernoulli_distribution coin(config.inclusion_probability);
  std::vector<Individual> population;
  population.reserve(config.population_size);
  for (std::size_t k = 0; k < config.population_size; ++k) {
    Selection sel(instance.n);
    for (std::size_t i = 0; i < instance.n; ++i) sel.set(i, coin(rng));
    population.push_back(make_individual(instance, std::move(sel)));
  }
  return population;
}

std::weak_ordering fitness_rank(const Individual& a, const Individual& b) {
  if (a.feasible != b.feasible)
    return a.feasible ? std::weak_ordering::greater : std::weak_ordering::less;
  if (!a.feasible && a.violation != b.violation)
    return a.violation < b.violation ? std::weak_ordering::greater
                                     : std::weak_ordering::less;
  if (a.value != b.value)
    return a.value > b.value ? std::weak_ordering::greater : std::weak_ordering::less;
  return std::weak_ordering::equivalent;
}

const Individual& select_parent(std::span<const Individual> population,
                                const GaConfig& config, Rng& rng) {
  if (population.empty()) throw std::invalid_argument("cannot select from an empty population");
  std::uniform_int_distribution<std::size_t> pick(0, population.size() - 1);
  const Individual* winner = &population[pick(rng)];
  for (std::size_t k = 1; k < config.tournament_size; ++k) {
    const Individual& challenger = population[pick(rng)];
    if (fitness_rank(challenger, *winner) > 0) winner = &challenger;
  }
  return *winner;
}

Individual greedy_crossover(const Instance& instance, const UtilityRatios& ratios,
                            const Individual& a, const Individual& b) {
  if (a.sel.size() != instance.n || b.sel.size() != instance.n)
    throw std::invalid_argument("parent length does not match instance");
  Selection pool(instance.n);
  for (std::size_t i = 0; i < instance.n; ++i)
    if (a.sel.test(i) || b.sel.test(i)) pool.set(i);
  return make_individual(instance, greedy_construct(instance, ratios, pool));
}

Individual mutate(const Instance& instance, const Individual& ind,
                  const GaConfig& config, Rng& rng) {
  const double rate = config.effective_mutation_rate(instance.n);
  if (rate <= 0) return ind;
  std::bernoulli_distribution flip(rate);
  Selection sel = ind.sel;
  bool changed = false;
  for (std::size_t i = 0; i < sel.size(); ++i) {
    if (flip(rng)) {
      sel.flip(i);
      changed = true;
    }
  }
  return changed ? make_individual(instance, std::move(sel)) : ind;
}

GaResult evolve(const Instance& instance, const GaConfig& config) {
  config.validate();
  instance.validate();
  const auto start = Clock::now();

  GaResult result;
  const Multipliers mult = compute_multipliers(instance, config.multiplier_iterations,
                                               config.multiplier_step);
  const UtilityRatios ratios = compute_ratios(instance, mult, config.divide_by_m);
  Individual baseline = make_individual(instance, greedy_construct(instance, ratios));
  result.greedy_baseline = baseline.value;
  result.upper_bound = mult.best_bound;

  Rng rng(config.seed);
  std::vector<Individual> population = init_population(instance, config, rng);
  population.back() = baseline;

  result.best = baseline;
  for (const auto& ind : population)
    if (ind.feasible && ind.value > result.best.value) result.best = ind;
  result.history.push_back(result.best.value);
  result.generation_best.push_back(best_feasible(population));

  auto solved = [&] {
    if (instance.known_optimum && reaches(result.best.value, *instance.known_optimum))
      return true;
    return reaches(result.best.value, result.upper_bound);
  };
  auto out_of_time = [&] {
    return config.time_limit_seconds &&
           std::chrono::duration<double>(Clock::now() - start).count() >=
               *config.time_limit_seconds;
  };

  std::vector<std::size_t> ranked(population.size());
  std::vector<Individual> next;
  next.reserve(population.size());
  std::size_t last_improvement = 0;
  for (std::size_t gen = 1; gen <= config.generations && !solved(); ++gen) {
    if (out_of_time()) {
      result.hit_time_limit = true;
      break;
    }
    std::iota(ranked.begin(), ranked.end(), std::size_t{0});
    std::stable_sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) {
      return fitness_rank(population[a], population[b]) > 0;
    });

    next.clear();
    for (std::size_t k = 0; k < config.elite_count; ++k) next.push_back(population[ranked[k]]);
    while (next.size() < config.population_size) {
      const Individual& a = select_parent(population, config, rng);
      const Individual& b = select_parent(population, config, rng);
      next.push_back(mutate(instance, greedy_crossover(instance, ratios, a, b), config, rng));
    }
    population.swap(next);

    for (const auto& ind : population) {
      if (ind.feasible && ind.value > result.best.value) {
        result.best = ind;
        result.generation_found = gen;
        last_improvement = gen;
      }
    }
    result.history.push_back(result.best.value);
    result.generation_best.push_back(best_feasible(population));
    result.generations_run = gen;

    if (config.no_improvement_limit && gen - last_improvement >= *config.no_improvement_limit)
      break;
  }

  result.elapsed = Clock::now() - start;
  return result;
}

}  // namespace mkga
