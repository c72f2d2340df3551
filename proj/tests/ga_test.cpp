#include <doctest.h>

#include <cmath>
#include <random>

#include "mkga/ga.hpp"
#include "mkga/generate.hpp"
#include "support.hpp"

using namespace mkga;
using mkga::testing::bits;
using mkga::testing::t1;

namespace {

UtilityRatios unit_ratios(const Instance& t) { return compute_ratios(t, init_multipliers(t)); }

}  // namespace

TEST_CASE("make_individual caches agree with the instance arithmetic") {
  const Instance t = t1();
  const Individual full = make_individual(t, bits({1, 1, 1}));
  CHECK(full.value == 28);
  CHECK(full.usage == std::vector<double>{6, 6});
  CHECK_FALSE(full.feasible);
  CHECK(full.violation == doctest::Approx(0.4));  // 1/5 + 1/5
  const Individual good = make_individual(t, bits({0, 1, 1}));
  CHECK(good.feasible);
  CHECK(good.violation == 0);
}

TEST_CASE("GaConfig validation") {
  GaConfig c;
  CHECK_NOTHROW(c.validate());
  c.elite_count = c.population_size;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = GaConfig{};
  c.tournament_size = c.population_size + 1;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = GaConfig{};
  c.tournament_size = 1;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = GaConfig{};
  c.inclusion_probability = 1.5;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = GaConfig{};
  c.mutation_rate = -0.1;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = GaConfig{};
  c.generations = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK(GaConfig{}.effective_mutation_rate(50) == doctest::Approx(0.02));
}

TEST_CASE("init_population honours the inclusion probability") {
  const Instance t = t1();
  GaConfig c;
  c.population_size = 10;
  Rng rng(1);

  c.inclusion_probability = 0;
  for (const auto& ind : init_population(t, c, rng)) {
    CHECK(ind.sel == bits({0, 0, 0}));
    CHECK(ind.feasible);
    CHECK(ind.value == 0);
  }
  c.inclusion_probability = 1;
  for (const auto& ind : init_population(t, c, rng)) {
    CHECK(ind.sel == bits({1, 1, 1}));
    CHECK_FALSE(ind.feasible);
  }

  const Instance big = generate_instance(100, 3, 9);
  c.inclusion_probability = 0.5;
  c.population_size = 200;
  const auto pop = init_population(big, c, rng);
  REQUIRE(pop.size() == 200);
  double total = 0;
  for (const auto& ind : pop) total += static_cast<double>(ind.sel.count());
  const double mean = total / 200.0;
  CHECK(std::fabs(mean - 50) <= 3 * std::sqrt(25.0));
  // Standard error of the population mean is 5 / sqrt(200).
  CHECK(std::fabs(mean - 50) <= 4 * 5 / std::sqrt(200.0));
}

TEST_CASE("fitness_rank orders feasibility, value, then violation") {
  const Instance t = t1();
  Individual a = make_individual(t, bits({0, 1, 1}));  // 22
  Individual b = make_individual(t, bits({1, 1, 0}));  // 16
  CHECK(fitness_rank(a, b) > 0);
  CHECK(fitness_rank(b, a) < 0);
  CHECK(fitness_rank(a, a) == 0);

  Individual empty = make_individual(t, bits({0, 0, 0}));
  Individual rich;
  rich.value = 100;
  rich.feasible = false;
  rich.violation = 5;
  CHECK(fitness_rank(empty, rich) > 0);

  Individual full = make_individual(t, bits({1, 1, 1}));  // violation 0.4
  Individual worse = full;
  worse.violation = 0.6;
  worse.value = 50;
  CHECK(fitness_rank(full, worse) > 0);

  Individual same = full;
  same.value = 10;
  CHECK(fitness_rank(full, same) > 0);
}

TEST_CASE("select_parent: full-size tournament with replacement") {
  const Instance t = generate_instance(8, 2, 4);
  GaConfig c;
  c.population_size = 5;
  c.tournament_size = 5;
  std::vector<Individual> pop;
  for (int k = 0; k < 5; ++k) {
    Individual ind = make_individual(t, Selection(t.n));
    ind.value = k;  // distinct fitnesses; index 4 is the best
    pop.push_back(ind);
  }
  Rng rng(2024);
  int wins = 0;
  const int trials = 10000;
  for (int k = 0; k < trials; ++k) wins += select_parent(pop, c, rng).value == 4 ? 1 : 0;
  const double expected = 1 - std::pow(4.0 / 5.0, 5);  // 0.67232
  const double se = std::sqrt(expected * (1 - expected) / trials);
  CHECK(std::fabs(wins / double(trials) - expected) <= 4 * se);
}

TEST_CASE("select_parent: feasible member of a pair wins three times in four") {
  const Instance t = t1();
  std::vector<Individual> pop = {make_individual(t, bits({1, 1, 1})),
                                 make_individual(t, bits({0, 0, 0}))};
  GaConfig c;
  c.population_size = 2;
  c.tournament_size = 2;
  Rng rng(7);
  int wins = 0;
  const int trials = 10000;
  for (int k = 0; k < trials; ++k) wins += select_parent(pop, c, rng).feasible ? 1 : 0;
  const double se = std::sqrt(0.75 * 0.25 / trials);
  CHECK(std::fabs(wins / double(trials) - 0.75) <= 4 * se);

  std::vector<Individual> twins(4, make_individual(t, bits({0, 1, 0})));
  CHECK(select_parent(twins, c, rng).value == 10);
  CHECK_THROWS_AS(select_parent(std::span<const Individual>{}, c, rng), std::invalid_argument);
}

TEST_CASE("greedy_crossover on T1") {
  const Instance t = t1();
  const UtilityRatios r = unit_ratios(t);
  const Individual child = greedy_crossover(t, r, make_individual(t, bits({1, 1, 0})),
                                            make_individual(t, bits({0, 0, 1})));
  CHECK(child.sel == bits({0, 1, 1}));
  CHECK(child.value == 22);
  CHECK(child.feasible);

  const Individual zero = make_individual(t, bits({0, 0, 0}));
  CHECK(greedy_crossover(t, r, zero, zero).sel == bits({0, 0, 0}));

  for (auto parent : {bits({0, 1, 1}), bits({1, 0, 0}), bits({1, 1, 0})}) {
    const Individual p = make_individual(t, parent);
    CHECK(greedy_crossover(t, r, p, p).sel == parent);
  }
}

TEST_CASE("property: crossover offspring are feasible subsets of the parent union") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10000; ++trial) {
    const Instance t =
        mkga::testing::random_instance(rng, 1 + rng() % 60, 1 + rng() % 10, 0.5);
    const UtilityRatios r = compute_ratios(t, compute_multipliers(t, rng() % 4, 0.5));
    const Individual a = make_individual(t, mkga::testing::random_selection(rng, t.n));
    const Individual b = make_individual(t, mkga::testing::random_selection(rng, t.n));
    const Individual child = greedy_crossover(t, r, a, b);
    REQUIRE(child.feasible);
    REQUIRE(is_feasible(t, child.sel));
    for (std::size_t i : child.sel.indices()) REQUIRE((a.sel.test(i) || b.sel.test(i)));
  }
}

TEST_CASE("mutate") {
  const Instance t = t1();
  const Individual p = make_individual(t, bits({0, 1, 1}));
  GaConfig c;
  Rng rng(3);

  c.mutation_rate = 0;
  CHECK(mutate(t, p, c, rng).sel == p.sel);

  c.mutation_rate = 1;
  const Individual flipped = mutate(t, p, c, rng);
  CHECK(flipped.sel == bits({1, 0, 0}));
  CHECK(flipped.feasible);
  CHECK(flipped.value == 6);
  CHECK(flipped.usage == std::vector<double>{1, 2});

  const Instance big = generate_instance(100, 2, 5);
  const Individual base = make_individual(big, Selection(100));
  c.mutation_rate = 0.02;
  double flips = 0;
  for (int k = 0; k < 10000; ++k) flips += static_cast<double>(mutate(big, base, c, rng).sel.count());
  CHECK(flips / 10000 == doctest::Approx(2.0).epsilon(0.075));
}

TEST_CASE("evolve solves T1") {
  GaConfig c;
  c.population_size = 20;
  c.generations = 50;
  c.seed = 42;
  const GaResult res = evolve(t1(), c);
  CHECK(res.best.value == 22);
  CHECK(res.best.feasible);
  CHECK(res.generation_found <= 5);
  CHECK(res.greedy_baseline == 22);
}

TEST_CASE("evolve with a single individual and one generation") {
  const Instance t = generate_instance(12, 3, 8);
  GaConfig c;
  c.population_size = 1;
  c.generations = 1;
  c.elite_count = 0;
  c.mutation_rate = 0;
  c.no_improvement_limit.reset();
  const GaResult res = evolve(t, c);
  CHECK(res.best.feasible);
  CHECK(res.best.value >= res.greedy_baseline);
  CHECK(res.history.size() <= 2);
}

TEST_CASE("evolve is deterministic for a fixed seed") {
  const Instance t = generate_instance(40, 5, 77);
  GaConfig c;
  c.generations = 60;
  c.seed = 99;
  const GaResult a = evolve(t, c);
  const GaResult b = evolve(t, c);
  CHECK(a.history == b.history);
  CHECK(a.generation_best == b.generation_best);
  CHECK(a.best.sel == b.best.sel);
  CHECK(a.generation_found == b.generation_found);
}

TEST_CASE("evolve stops at a known optimum") {
  Instance t = t1();
  GaConfig c;
  c.generations = 500;
  const GaResult res = evolve(t, c);
  CHECK(res.generations_run == 0);  // greedy baseline already optimal
  CHECK(res.history.size() == 1);
}

TEST_CASE("evolve respects the no-improvement limit and the time limit") {
  Instance t = generate_instance(60, 5, 3);
  GaConfig c;
  c.generations = 10000;
  c.no_improvement_limit = 5;
  const GaResult res = evolve(t, c);
  CHECK(res.generations_run <= res.generation_found + 5);

  c.no_improvement_limit.reset();
  c.time_limit_seconds = 0.05;
  c.generations = 100000000;
  const GaResult timed = evolve(t, c);
  if (timed.best.value < timed.upper_bound - 1e-9) {
    CHECK(timed.hit_time_limit);
    CHECK(timed.elapsed.count() < 2.0);
  }
}

TEST_CASE("property: evolve invariants over random instances") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance t = mkga::testing::random_instance(rng, 5 + rng() % 40, 1 + rng() % 8);
    GaConfig c;
    c.population_size = 30;
    c.generations = 40;
    c.seed = rng();
    c.elite_count = 1 + trial % 3;
    const GaResult res = evolve(t, c);
    CHECK(res.best.feasible);
    CHECK(is_feasible(t, res.best.sel));
    CHECK(res.best.value == objective(t, res.best.sel));
    CHECK(res.best.value >= res.greedy_baseline);
    CHECK(res.best.value <= res.upper_bound + 1e-9);
    REQUIRE(res.history.size() == res.generations_run + 1);
    for (std::size_t g = 1; g < res.history.size(); ++g) {
      CHECK(res.history[g] >= res.history[g - 1]);
      CHECK(res.generation_best[g] >= res.generation_best[g - 1]);
    }
  }
}
