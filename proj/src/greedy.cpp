#include "mkga/greedy.hpp"

#include <stdexcept>

namespace mkga {

Selection greedy_construct(const Instance& instance, const UtilityRatios& ratios,
                           const std::optional<Selection>& candidates) {
  if (candidates && candidates->size() != instance.n)
    throw std::invalid_argument("candidate set length does not match instance");

  Selection out(instance.n);
  std::vector<double> used(instance.m, 0.0);
  for (std::size_t i : ratios.order) {
    if (candidates && !candidates->test(i)) continue;
    bool fits = true;
    for (std::size_t j = 0; j < instance.m && fits; ++j)
      fits = used[j] + instance.weights[j][i] <= instance.capacities[j];
    if (!fits) continue;
    for (std::size_t j = 0; j < instance.m; ++j) used[j] += instance.weights[j][i];
    out.set(i);
  }
  return out;
}

double greedy_estimate(const Instance& instance, const Multipliers& mult) {
  const auto ratios = compute_ratios(instance, mult, true);
  return objective(instance, greedy_construct(instance, ratios));
}

}  // namespace mkga
