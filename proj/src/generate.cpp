#include "mkga/generate.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace mkga {

Instance generate_instance(std::size_t n, std::size_t m, std::uint64_t seed,
                           double tightness, std::string name) {
  if (n == 0 || m == 0) throw std::invalid_argument("generator needs n >= 1 and m >= 1");
  if (!(tightness > 0 && tightness <= 1))
    throw std::invalid_argument("tightness must lie in (0, 1]");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> value(1, 100);
  std::uniform_int_distribution<int> weight(1, 50);

  Instance instance;
  instance.name = std::move(name);
  instance.n = n;
  instance.m = m;
  instance.values.resize(n);
  for (auto& v : instance.values) v = value(rng);
  instance.weights.assign(m, std::vector<double>(n));
  instance.capacities.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    double total = 0;
    for (auto& w : instance.weights[j]) total += (w = weight(rng));
    instance.capacities[j] = std::floor(tightness * total);
  }
  return instance;
}

}  // namespace mkga
