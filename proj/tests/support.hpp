// Shared fixtures and independent reference computations for tests.

#ifndef MKGA_TESTS_SUPPORT_HPP
#define MKGA_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "mkga/instance.hpp"

namespace mkga::testing {

// 3 objects, 2 constraints, optimum 22 = objects 2 and 3.
inline Instance t1() {
  Instance t;
  t.name = "t1";
  t.n = 3;
  t.m = 2;
  t.values = {6, 10, 12};
  t.weights = {{1, 2, 3}, {2, 2, 2}};
  t.capacities = {5, 5};
  t.known_optimum = 22;
  return t;
}

inline Selection bits(std::vector<std::uint8_t> b) { return Selection(std::move(b)); }

struct BruteForce {
  double value = 0;
  std::uint64_t mask = 0;
};

// Plain enumeration of all 2^n subsets; shares no code with the library.
inline BruteForce enumerate_optimum(const Instance& inst) {
  if (inst.n > 24) throw std::invalid_argument("enumeration limited to n <= 24");
  BruteForce best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inst.n); ++mask) {
    double value = 0;
    bool ok = true;
    for (std::size_t j = 0; j < inst.m && ok; ++j) {
      double load = 0;
      for (std::size_t i = 0; i < inst.n; ++i)
        if (mask >> i & 1) load += inst.weights[j][i];
      ok = load <= inst.capacities[j];
    }
    if (!ok) continue;
    for (std::size_t i = 0; i < inst.n; ++i)
      if (mask >> i & 1) value += inst.values[i];
    if (value > best.value) best = {value, mask};
  }
  return best;
}

// Integer-valued random instance with arbitrary capacity tightness.
inline Instance random_instance(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                double tightness = 0.5) {
  std::uniform_int_distribution<int> val(0, 60);
  std::uniform_int_distribution<int> wt(0, 30);
  Instance t;
  t.name = "rand";
  t.n = n;
  t.m = m;
  t.values.resize(n);
  for (auto& v : t.values) v = val(rng);
  t.weights.assign(m, std::vector<double>(n));
  t.capacities.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    double total = 0;
    for (auto& w : t.weights[j]) total += (w = wt(rng));
    t.capacities[j] = static_cast<double>(static_cast<long long>(tightness * total));
  }
  return t;
}

inline Selection random_selection(std::mt19937_64& rng, std::size_t n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  Selection s(n);
  for (std::size_t i = 0; i < n; ++i) s.set(i, coin(rng));
  return s;
}

}  // namespace mkga::testing

#endif  // MKGA_TESTS_SUPPORT_HPP
